use std::collections::BTreeMap;

use serde::de::{self, Deserializer, MapAccess, Visitor};
use serde::ser::{SerializeMap, SerializeStruct, Serializer};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;

/// An edge labelling `h: E -> {0..k}`, keyed by label pairs `(u, v)`, `u < v`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntegerKMatching {
    pub k: u32,
    pub values: BTreeMap<(usize, usize), u32>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum IkmKind {
    Perfect,
    AlmostPerfect,
    Neither,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct IkmClass {
    pub kind: IkmKind,
    /// The single vertex with sum k - 1, for almost perfect assignments.
    pub deficient_vertex: Option<usize>,
}

impl IntegerKMatching {
    pub fn zero(g: &Graph, k: u32) -> Self {
        IntegerKMatching { k, values: g.labeled_edges().map(|e| (e, 0)).collect() }
    }

    /// Builds from per-edge values given in the order of `g.edges()`.
    pub fn from_edge_values(g: &Graph, k: u32, values: &[u32]) -> Self {
        assert_eq!(values.len(), g.m());
        IntegerKMatching { k, values: g.labeled_edges().zip(values.iter().copied()).collect() }
    }

    pub fn get(&self, u: usize, v: usize) -> u32 {
        self.values.get(&(u.min(v), u.max(v))).copied().unwrap_or(0)
    }

    pub fn total(&self) -> u64 {
        self.values.values().map(|&x| x as u64).sum()
    }

    /// Edges with h(e) != 0.
    pub fn support(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.values.iter().filter(|(_, &x)| x != 0).map(|(&e, _)| e)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("assignment serializes")
    }

    pub fn from_json(s: &str) -> Result<Self> {
        Ok(serde_json::from_str(s)?)
    }
}

/// Checks `m` against `g` and classifies it.
pub fn verify(g: &Graph, m: &IntegerKMatching) -> Result<IkmClass> {
    if m.values.len() != g.m() {
        return Err(Error::DomainMismatch(format!("{} values for {} edges", m.values.len(), g.m())));
    }
    let mut sums = vec![0u32; g.n()];
    for (&(u, v), (&(a, b), &x)) in g.edges().iter().zip(m.values.iter()) {
        if (g.label(u), g.label(v)) != (a, b) {
            return Err(Error::DomainMismatch(format!(
                "value for {a}-{b} but edge {}-{} expected",
                g.label(u),
                g.label(v)
            )));
        }
        if x > m.k {
            return Err(Error::EdgeValue(a, b, x, m.k));
        }
        sums[u] += x;
        sums[v] += x;
    }
    if let Some(v) = (0..g.n()).find(|&v| sums[v] > m.k) {
        return Err(Error::VertexSum(g.label(v), sums[v], m.k));
    }
    let short: Vec<usize> = (0..g.n()).filter(|&v| sums[v] != m.k).collect();
    Ok(match short.as_slice() {
        [] => IkmClass { kind: IkmKind::Perfect, deficient_vertex: None },
        [v] if m.k >= 1 && sums[*v] == m.k - 1 => {
            IkmClass { kind: IkmKind::AlmostPerfect, deficient_vertex: Some(g.label(*v)) }
        }
        _ => IkmClass { kind: IkmKind::Neither, deficient_vertex: None },
    })
}

struct EdgeValues<'a>(&'a BTreeMap<(usize, usize), u32>);

impl Serialize for EdgeValues<'_> {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut map = s.serialize_map(Some(self.0.len()))?;
        for (&(u, v), x) in self.0 {
            map.serialize_entry(&format!("{u}-{v}"), x)?;
        }
        map.end()
    }
}

impl Serialize for IntegerKMatching {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("IntegerKMatching", 2)?;
        st.serialize_field("k", &self.k)?;
        st.serialize_field("values", &EdgeValues(&self.values))?;
        st.end()
    }
}

struct ValuesVisitor;

impl<'de> Visitor<'de> for ValuesVisitor {
    type Value = BTreeMap<(usize, usize), u32>;

    fn expecting(&self, f: &mut std::fmt::Formatter) -> std::fmt::Result {
        f.write_str("a map from \"u-v\" keys to edge values")
    }

    fn visit_map<A: MapAccess<'de>>(self, mut access: A) -> std::result::Result<Self::Value, A::Error> {
        let mut out = BTreeMap::new();
        while let Some((key, value)) = access.next_entry::<String, u32>()? {
            let (a, b) = key.split_once('-').ok_or_else(|| de::Error::custom(format!("bad edge key {key:?}")))?;
            let u: usize = a.parse().map_err(|_| de::Error::custom(format!("bad edge key {key:?}")))?;
            let v: usize = b.parse().map_err(|_| de::Error::custom(format!("bad edge key {key:?}")))?;
            if u >= v {
                return Err(de::Error::custom(format!("edge key {key:?} must satisfy u < v")));
            }
            if out.insert((u, v), value).is_some() {
                return Err(de::Error::custom(format!("duplicate edge key {key:?}")));
            }
        }
        Ok(out)
    }
}

struct Values(BTreeMap<(usize, usize), u32>);

impl<'de> Deserialize<'de> for Values {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        d.deserialize_map(ValuesVisitor).map(Values)
    }
}

#[derive(Deserialize)]
struct RawAssignment {
    k: u32,
    values: Values,
}

impl<'de> Deserialize<'de> for IntegerKMatching {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let raw = RawAssignment::deserialize(d)?;
        Ok(IntegerKMatching { k: raw.k, values: raw.values.0 })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{complete, cycle};

    #[test]
    fn c5_all_ones_is_perfect_for_k2() {
        let g = cycle(5).unwrap();
        let h = IntegerKMatching::from_edge_values(&g, 2, &[1; 5]);
        assert_eq!(verify(&g, &h).unwrap().kind, IkmKind::Perfect);
    }

    #[test]
    fn single_edge_full_weight() {
        let g = complete(2).unwrap();
        let h = IntegerKMatching::from_edge_values(&g, 3, &[3]);
        assert_eq!(verify(&g, &h).unwrap().kind, IkmKind::Perfect);
    }

    #[test]
    fn c7_alternating_is_almost_perfect() {
        // around the cycle 0-1-2-3-4-5-6-0: 1,2,1,2,1,2,1; vertex 0 sits between two 1-edges
        let g = cycle(7).unwrap();
        let mut values = BTreeMap::new();
        for (i, x) in [1, 2, 1, 2, 1, 2, 1].into_iter().enumerate() {
            let (u, v) = (i, (i + 1) % 7);
            values.insert((u.min(v), u.max(v)), x);
        }
        let h = IntegerKMatching { k: 3, values };
        let c = verify(&g, &h).unwrap();
        assert_eq!(c.kind, IkmKind::AlmostPerfect);
        assert_eq!(c.deficient_vertex, Some(0));
    }

    #[test]
    fn violations() {
        let g = cycle(3).unwrap();
        let over = IntegerKMatching::from_edge_values(&g, 3, &[4, 0, 0]);
        assert!(matches!(verify(&g, &over), Err(Error::EdgeValue(0, 1, 4, 3))));
        let heavy = IntegerKMatching::from_edge_values(&g, 3, &[2, 2, 0]);
        assert!(matches!(verify(&g, &heavy), Err(Error::VertexSum(0, 4, 3))));
        let mut missing = IntegerKMatching::zero(&g, 3);
        missing.values.remove(&(0, 1));
        assert!(matches!(verify(&g, &missing), Err(Error::DomainMismatch(_))));
        let mut wrong = IntegerKMatching::zero(&cycle(4).unwrap(), 3);
        wrong.values.remove(&(2, 3));
        assert!(matches!(verify(&g, &wrong), Err(Error::DomainMismatch(_))));
    }

    #[test]
    fn zero_assignment_is_neither() {
        let g = cycle(4).unwrap();
        assert_eq!(verify(&g, &IntegerKMatching::zero(&g, 2)).unwrap().kind, IkmKind::Neither);
    }

    #[test]
    fn json_shape() {
        let g = cycle(3).unwrap();
        let h = IntegerKMatching::from_edge_values(&g, 3, &[2, 1, 0]);
        let s = h.to_json();
        assert_eq!(s, r#"{"k":3,"values":{"0-1":2,"0-2":1,"1-2":0}}"#);
        assert_eq!(IntegerKMatching::from_json(&s).unwrap(), h);
        assert!(IntegerKMatching::from_json(r#"{"k":3,"values":{"2-1":1}}"#).is_err());
    }
}
