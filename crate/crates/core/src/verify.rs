//! Certificate checking and brute-force cycle search.
//!
//! Nothing in here calls into the cycle constructors. Hosts are rebuilt from the
//! certificate's descriptor, and field adjacency is re-derived from the serialized
//! modulus with the Euler criterion.

use std::fmt;
use std::path::Path;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::ff::{Field, FieldError, FieldSpec};
use crate::graph::{GraphDescriptor, HostGraph};

/// An ordered vertex list claiming to be a `k`-cycle of the described graph.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CycleCertificate {
    pub graph: GraphDescriptor,
    pub k: usize,
    pub vertices: Vec<u64>,
    pub construction: String,
}

impl CycleCertificate {
    pub fn new(graph: GraphDescriptor, vertices: Vec<u64>, construction: impl Into<String>) -> Self {
        Self { graph, k: vertices.len(), vertices, construction: construction.into() }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("serializable")
    }

    pub fn from_json(s: &str) -> Result<Self, VerifyError> {
        serde_json::from_str(s).map_err(|e| VerifyError::Malformed(e.to_string()))
    }

    pub fn read(path: &Path) -> Result<Self, VerifyError> {
        let text = std::fs::read_to_string(path).map_err(|e| VerifyError::Malformed(format!("{}: {e}", path.display())))?;
        Self::from_json(&text)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum VerifyError {
    #[error("malformed certificate: {0}")]
    Malformed(String),
    #[error("malformed field descriptor: {0}")]
    Field(#[from] FieldError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum FailureReason {
    DuplicateVertex,
    NonEdge,
    WrongLength,
}

impl fmt::Display for FailureReason {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            FailureReason::DuplicateVertex => "duplicate-vertex",
            FailureReason::NonEdge => "non-edge",
            FailureReason::WrongLength => "wrong-length",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Failure {
    pub reason: FailureReason,
    /// Offending position (duplicates, wrong length) or the pair's first position.
    pub index: usize,
    /// Offending vertex pair for non-edges.
    pub pair: Option<(u64, u64)>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerifyReport {
    pub failure: Option<Failure>,
}

impl VerifyReport {
    fn ok() -> Self {
        Self { failure: None }
    }

    fn fail(reason: FailureReason, index: usize, pair: Option<(u64, u64)>) -> Self {
        Self { failure: Some(Failure { reason, index, pair }) }
    }

    pub fn is_ok(&self) -> bool {
        self.failure.is_none()
    }
}

impl fmt::Display for VerifyReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.failure {
            None => f.write_str("ok"),
            Some(Failure { reason, index, pair: Some((u, v)) }) => write!(f, "fail {reason} at {index} ({u},{v})"),
            Some(Failure { reason, index, pair: None }) => write!(f, "fail {reason} at {index}"),
        }
    }
}

/// Host graph reconstructed from a descriptor.
pub enum Host {
    Power { field: Field, power: u64 },
    Cyclic { m: u64, member: Vec<bool> },
    Digits { p: u64, d: u32, member: Vec<bool> },
    Cycle(u64),
    Path(u64),
    Complete(u64),
    Product(Box<Host>, Box<Host>),
}

fn membership(order: u64, set: &[u64], neg: impl Fn(u64) -> u64) -> Result<Vec<bool>, VerifyError> {
    let mut member = vec![false; order as usize];
    for &s in set {
        if s == 0 || s >= order {
            return Err(VerifyError::Malformed(format!("connection element {s} is invalid")));
        }
        member[s as usize] = true;
    }
    if let Some(&s) = set.iter().find(|&&s| !member[neg(s) as usize]) {
        return Err(VerifyError::Malformed(format!("connection set is missing the negation of {s}")));
    }
    Ok(member)
}

fn digit_sub(p: u64, d: u32, mut a: u64, mut b: u64) -> u64 {
    let mut out = 0;
    let mut place = 1;
    for _ in 0..d {
        out += ((a % p + p - b % p) % p) * place;
        a /= p;
        b /= p;
        place *= p;
    }
    out
}

fn order_of(p: u64, d: u32) -> Result<u64, VerifyError> {
    p.checked_pow(d)
        .filter(|&q| q <= 1 << 32)
        .ok_or_else(|| VerifyError::Malformed(format!("group order {p}^{d} is too large")))
}

impl Host {
    pub fn from_descriptor(desc: &GraphDescriptor) -> Result<Self, VerifyError> {
        Ok(match desc {
            GraphDescriptor::Paley { p, n, modulus } => {
                let spec = FieldSpec::new(*p, *n, modulus.clone())?;
                if spec.order() % 4 != 1 {
                    return Err(VerifyError::Malformed(format!("P({}) is not defined", spec.order())));
                }
                Host::Power { field: Field::new(spec), power: 2 }
            }
            GraphDescriptor::GeneralizedPaley { p, n, modulus, power } => {
                let spec = FieldSpec::new(*p, *n, modulus.clone())?;
                if *power < 2 {
                    return Err(VerifyError::Malformed(format!("power {power} is below 2")));
                }
                Host::Power { field: Field::new(spec), power: *power }
            }
            GraphDescriptor::CyclicCayley { m, connection_set } => {
                let m = *m;
                if m == 0 || m > 1 << 32 {
                    return Err(VerifyError::Malformed(format!("group order {m} is unsupported")));
                }
                let member = membership(m, connection_set, |s| (m - s) % m)?;
                Host::Cyclic { m, member }
            }
            GraphDescriptor::FieldCayley { p, n, modulus, connection_set } => {
                let spec = FieldSpec::new(*p, *n, modulus.clone())?;
                let member = membership(spec.order(), connection_set, |s| digit_sub(*p, *n, 0, s))?;
                Host::Digits { p: *p, d: *n, member }
            }
            GraphDescriptor::ElementaryCayley { p, d, connection_set } => {
                let order = order_of(*p, *d)?;
                let member = membership(order, connection_set, |s| digit_sub(*p, *d, 0, s))?;
                Host::Digits { p: *p, d: *d, member }
            }
            GraphDescriptor::Cycle { order } => Host::Cycle(*order),
            GraphDescriptor::Path { order } => Host::Path(*order),
            GraphDescriptor::Complete { order } => Host::Complete(*order),
            GraphDescriptor::Product { left, right } => {
                let l = Host::from_descriptor(left)?;
                let r = Host::from_descriptor(right)?;
                if l.order().checked_mul(r.order()).is_none() {
                    return Err(VerifyError::Malformed("product order overflows".into()));
                }
                Host::Product(Box::new(l), Box::new(r))
            }
        })
    }

    pub fn order(&self) -> u64 {
        match self {
            Host::Power { field, .. } => field.order(),
            Host::Cyclic { m, .. } => *m,
            Host::Digits { member, .. } => member.len() as u64,
            Host::Cycle(n) | Host::Path(n) | Host::Complete(n) => *n,
            Host::Product(l, r) => l.order() * r.order(),
        }
    }

    /// Adjacency of two in-range vertices.
    pub fn adjacent(&self, u: u64, v: u64) -> bool {
        if u == v {
            return false;
        }
        match self {
            Host::Power { field, power } => {
                let a = field.decode(u).expect("in range");
                let b = field.decode(v).expect("in range");
                field.is_kth_power(&field.sub(&a, &b), *power).unwrap_or(false)
            }
            Host::Cyclic { m, member } => member[((u + m - v) % m) as usize],
            Host::Digits { p, d, member } => member[digit_sub(*p, *d, u, v) as usize],
            Host::Cycle(n) => *n >= 3 && ((u + 1) % n == v || (v + 1) % n == u),
            Host::Path(_) => u.abs_diff(v) == 1,
            Host::Complete(_) => true,
            Host::Product(l, r) => {
                let w = r.order();
                let (ua, ub) = (u / w, u % w);
                let (va, vb) = (v / w, v % w);
                (ua == va && r.adjacent(ub, vb)) || (ub == vb && l.adjacent(ua, va))
            }
        }
    }
}

fn check_walk(host: &Host, vertices: &[u64], closed: bool) -> Result<VerifyReport, VerifyError> {
    let order = host.order();
    if let Some(&v) = vertices.iter().find(|&&v| v >= order) {
        return Err(VerifyError::Malformed(format!("vertex {v} is outside a graph of order {order}")));
    }
    let mut seen = vec![false; order as usize];
    for (i, &v) in vertices.iter().enumerate() {
        if std::mem::replace(&mut seen[v as usize], true) {
            return Ok(VerifyReport::fail(FailureReason::DuplicateVertex, i, None));
        }
    }
    for (i, pair) in vertices.windows(2).enumerate() {
        if !host.adjacent(pair[0], pair[1]) {
            return Ok(VerifyReport::fail(FailureReason::NonEdge, i, Some((pair[0], pair[1]))));
        }
    }
    if closed {
        let (last, first) = (vertices[vertices.len() - 1], vertices[0]);
        if !host.adjacent(last, first) {
            return Ok(VerifyReport::fail(FailureReason::NonEdge, vertices.len() - 1, Some((last, first))));
        }
    }
    Ok(VerifyReport::ok())
}

/// Distinct vertices, consecutive pairs adjacent, closing pair adjacent.
pub fn check_cycle(cert: &CycleCertificate) -> Result<VerifyReport, VerifyError> {
    let host = Host::from_descriptor(&cert.graph)?;
    if cert.k < 3 || cert.vertices.len() != cert.k {
        return Ok(VerifyReport::fail(FailureReason::WrongLength, cert.vertices.len(), None));
    }
    check_walk(&host, &cert.vertices, true)
}

/// Distinct vertices with consecutive pairs adjacent.
pub fn check_path(graph: &GraphDescriptor, vertices: &[u64]) -> Result<VerifyReport, VerifyError> {
    let host = Host::from_descriptor(graph)?;
    if vertices.is_empty() {
        return Ok(VerifyReport::fail(FailureReason::WrongLength, 0, None));
    }
    check_walk(&host, vertices, false)
}

/// Outcome of the exhaustive search for one cycle length.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Presence {
    Present(Vec<u64>),
    Absent,
    /// The node budget ran out before the search space was exhausted.
    Unknown,
}

pub const DEFAULT_BUDGET: u64 = 10_000_000;

struct CycleSearch<'a> {
    adj: &'a [Vec<u64>],
    target: usize,
    start: u64,
    nodes: u64,
    budget: u64,
    on_path: Vec<bool>,
    path: Vec<u64>,
}

impl CycleSearch<'_> {
    /// `Some(true)` found, `Some(false)` exhausted, `None` budget exceeded.
    fn extend(&mut self) -> Option<bool> {
        self.nodes += 1;
        if self.nodes > self.budget {
            return None;
        }
        let last = *self.path.last().expect("path starts non-empty");
        if self.path.len() == self.target {
            // reflection: each cycle is found in one orientation only
            let closes = self.adj[last as usize].contains(&self.start);
            return Some(closes && self.path[1] < last);
        }
        for i in 0..self.adj[last as usize].len() {
            let next = self.adj[last as usize][i];
            if next <= self.start || self.on_path[next as usize] {
                continue;
            }
            self.on_path[next as usize] = true;
            self.path.push(next);
            match self.extend() {
                Some(true) => return Some(true),
                None => return None,
                Some(false) => {}
            }
            self.path.pop();
            self.on_path[next as usize] = false;
        }
        Some(false)
    }
}

/// Exhaustive DFS for a cycle of every length in `3..=max_len`.
///
/// Each cycle is searched from its smallest vertex, visiting only larger vertices.
/// A length whose search exceeds `budget` nodes is reported as [`Presence::Unknown`].
pub fn cycle_spectrum_bruteforce(g: &dyn HostGraph, max_len: usize, budget: u64) -> Vec<(usize, Presence)> {
    let n = g.order();
    let adj: Vec<Vec<u64>> = (0..n).map(|u| (0..n).filter(|&v| g.adjacent(u, v)).collect()).collect();
    (3..=max_len)
        .map(|k| {
            if k as u64 > n {
                return (k, Presence::Absent);
            }
            let mut nodes = 0;
            for start in 0..n {
                let mut search = CycleSearch {
                    adj: &adj,
                    target: k,
                    start,
                    nodes,
                    budget,
                    on_path: vec![false; n as usize],
                    path: vec![start],
                };
                search.on_path[start as usize] = true;
                match search.extend() {
                    Some(true) => return (k, Presence::Present(search.path)),
                    None => return (k, Presence::Unknown),
                    Some(false) => nodes = search.nodes,
                }
            }
            (k, Presence::Absent)
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{paley, CayleyGraph, CycleGraph};
    use proptest::prelude::*;

    fn paley_desc(q: u64) -> GraphDescriptor {
        paley(&FieldSpec::for_order(q).unwrap()).unwrap().descriptor()
    }

    fn cert(q: u64, vertices: Vec<u64>) -> CycleCertificate {
        CycleCertificate::new(paley_desc(q), vertices, "test")
    }

    #[test]
    fn figure_cycle_verifies() {
        assert!(check_cycle(&cert(13, vec![0, 1, 2, 3, 4, 5, 9])).unwrap().is_ok());
        assert!(check_cycle(&cert(13, vec![0, 3, 2, 5, 6, 7, 4, 1])).unwrap().is_ok());
    }

    #[test]
    fn closing_non_edge_is_reported() {
        let report = check_cycle(&cert(13, vec![0, 1, 2])).unwrap();
        let failure = report.failure.unwrap();
        assert_eq!(failure.reason, FailureReason::NonEdge);
        assert_eq!(failure.pair, Some((2, 0)));
    }

    #[test]
    fn duplicate_and_length_failures() {
        let report = check_cycle(&cert(13, vec![0, 1, 0, 1])).unwrap();
        assert_eq!(report.failure.unwrap().reason, FailureReason::DuplicateVertex);
        let mut c = cert(13, vec![0, 1, 4]);
        c.k = 4;
        assert_eq!(check_cycle(&c).unwrap().failure.unwrap().reason, FailureReason::WrongLength);
        assert_eq!(check_cycle(&cert(13, vec![0, 1])).unwrap().failure.unwrap().reason, FailureReason::WrongLength);
    }

    #[test]
    fn malformed_descriptors() {
        let bad_modulus = GraphDescriptor::Paley { p: 5, n: 2, modulus: vec![1, 0, 1] };
        let c = CycleCertificate::new(bad_modulus, vec![0, 1, 2], "test");
        assert!(matches!(check_cycle(&c), Err(VerifyError::Field(FieldError::Reducible(5)))));
        let not_paley = GraphDescriptor::Paley { p: 7, n: 1, modulus: vec![0, 1] };
        assert!(check_cycle(&CycleCertificate::new(not_paley, vec![0, 1, 2], "t")).is_err());
        assert!(check_cycle(&cert(13, vec![0, 1, 40])).is_err());
        assert!(CycleCertificate::from_json("{\"graph\": 3}").is_err());
    }

    #[test]
    fn path_checks() {
        assert!(check_path(&paley_desc(5), &[0, 1, 2, 3, 4]).unwrap().is_ok());
        assert!(check_path(&paley_desc(13), &[7]).unwrap().is_ok());
        let r = check_path(&paley_desc(13), &[0, 2]).unwrap();
        assert_eq!(r.failure.unwrap().reason, FailureReason::NonEdge);
    }

    #[test]
    fn product_host_adjacency() {
        let desc = GraphDescriptor::Product {
            left: Box::new(GraphDescriptor::Cycle { order: 3 }),
            right: Box::new(GraphDescriptor::Path { order: 2 }),
        };
        // the triangular prism: (0,0) (1,0) (2,0) (2,1) (1,1) (0,1)
        let hexagon = vec![0, 2, 4, 5, 3, 1];
        assert!(check_cycle(&CycleCertificate::new(desc.clone(), hexagon, "t")).unwrap().is_ok());
        assert!(!check_cycle(&CycleCertificate::new(desc, vec![0, 3, 4], "t")).unwrap().is_ok());
    }

    #[test]
    fn certificate_json_schema() {
        let c = cert(9, vec![0, 1, 2]);
        let v: serde_json::Value = serde_json::from_str(&c.to_json()).unwrap();
        assert_eq!(v["graph"]["kind"], "paley");
        assert_eq!(v["graph"]["modulus"], serde_json::json!([1, 0, 1]));
        assert_eq!(v["k"], 3);
        assert_eq!(CycleCertificate::from_json(&c.to_json()).unwrap(), c);
    }

    fn spectrum(g: &dyn HostGraph) -> (Vec<usize>, Vec<usize>) {
        let mut present = vec![];
        let mut absent = vec![];
        for (k, p) in cycle_spectrum_bruteforce(g, g.order() as usize, DEFAULT_BUDGET) {
            match p {
                Presence::Present(_) => present.push(k),
                Presence::Absent => absent.push(k),
                Presence::Unknown => panic!("budget exhausted at {k}"),
            }
        }
        (present, absent)
    }

    #[test]
    fn oracle_on_small_paley_graphs() {
        let p5 = paley(&FieldSpec::for_order(5).unwrap()).unwrap();
        assert_eq!(spectrum(&p5), (vec![5], vec![3, 4]));
        let p9 = paley(&FieldSpec::for_order(9).unwrap()).unwrap();
        assert_eq!(spectrum(&p9), ((3..=9).collect(), vec![]));
    }

    #[test]
    fn oracle_witnesses_verify() {
        let g = paley(&FieldSpec::for_order(13).unwrap()).unwrap();
        for (k, p) in cycle_spectrum_bruteforce(&g, 13, DEFAULT_BUDGET) {
            let Presence::Present(cycle) = p else { panic!("C_{k} missing") };
            assert!(check_cycle(&CycleCertificate::new(g.descriptor(), cycle, "oracle")).unwrap().is_ok());
        }
    }

    #[test]
    fn oracle_budget_gives_unknown() {
        let g = paley(&FieldSpec::for_order(13).unwrap()).unwrap();
        let result = cycle_spectrum_bruteforce(&g, 13, 5);
        assert!(result.iter().any(|(_, p)| *p == Presence::Unknown));
        assert!(result.iter().all(|(_, p)| *p != Presence::Absent));
    }

    #[test]
    fn oracle_on_bipartite_and_plain_cycles() {
        // the hexagon contains only its own 6-cycle
        let c6 = CayleyGraph::cyclic(6, [1, 5]).unwrap();
        assert_eq!(spectrum(&c6), (vec![6], vec![3, 4, 5]));
        assert_eq!(spectrum(&CycleGraph(7)), (vec![7], vec![3, 4, 5, 6]));
        // K_{3,3} = Cay(Z/6, {1,3,5}) has only even cycles
        let k33 = CayleyGraph::cyclic(6, [1, 3, 5]).unwrap();
        assert_eq!(spectrum(&k33), (vec![4, 6], vec![3, 5]));
    }

    proptest! {
        #[test]
        fn rotations_and_reflections_verify(shift in 0usize..7, reflect in any::<bool>()) {
            let mut v = vec![0, 1, 2, 3, 4, 5, 9];
            v.rotate_left(shift);
            if reflect {
                v.reverse();
            }
            prop_assert!(check_cycle(&cert(13, v)).unwrap().is_ok());
        }
    }
}
