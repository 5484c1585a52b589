//! Cycle certificates of every length in `P(q)`, and the Paley index of cycles.
//!
//! For `q = p` prime the cyclic constructions apply directly. For `q = pⁿ` with
//! `n >= 2` the field is split as `W₀ ⊕ W*` along a basis of squares with `f₀ = 1`:
//! short cycles live in `W₀ = GF(p)`, and longer ones are cylinder cycles lifted
//! through a Hamiltonian cycle of `W₀` and a Hamiltonian path of `W*`. The product
//! `G_{W₀} × G_{W*}` is a spanning subgraph of `P(q)`, since an edge of either factor
//! changes the field element by a square.

use thiserror::Error;

use crate::cyclic_cycles::{self, CycleError, NormalizedCyclicCayley};
use crate::ff::{prime_power, Field, FieldElement, FieldError, FieldSpec};
use crate::graph::{self, rank_mod_p, CayleyGraph, GraphError, Group, HostGraph};
use crate::product_cycles::{self, ProductError};
use crate::verify::{self, CycleCertificate, VerifyError};

#[derive(Debug, Error)]
pub enum PaleyError {
    #[error("{0} is not a prime power")]
    NotPrimePower(u64),
    #[error("P({0}) is undefined: {0} is not congruent to 1 mod 4")]
    NotOneModFour(u64),
    #[error("P(5) is the 5-cycle and has no 3- or 4-cycles")]
    PaleyFive,
    #[error("the subfield shortcut does not apply to characteristic 5")]
    FiveSubfield,
    #[error("cycle length {k} is outside 3..={max}")]
    LengthOutOfRange { k: u64, max: u64 },
    #[error("the Paley index is only defined here for cycles of length at least 3, got {0}")]
    IndexTooSmall(u64),
    #[error("subspace index {i} is outside 1..={max}")]
    SubspaceIndex { i: usize, max: usize },
    #[error("constructed {k}-cycle failed verification: {report}")]
    Unverified { k: usize, report: String },
    #[error(transparent)]
    Field(#[from] FieldError),
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Cycle(#[from] CycleError),
    #[error(transparent)]
    Product(#[from] ProductError),
    #[error(transparent)]
    Verify(#[from] VerifyError),
}

/// A basis of `GF(pⁿ)` over `GF(p)` made of nonzero squares, with `f₀ = 1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SquareBasis {
    pub f: Vec<FieldElement>,
}

impl SquareBasis {
    pub fn len(&self) -> usize {
        self.f.len()
    }

    pub fn is_empty(&self) -> bool {
        self.f.is_empty()
    }
}

/// Greedy scan in encoding order, keeping each square independent of those kept.
pub fn square_basis(spec: &FieldSpec) -> SquareBasis {
    let field = Field::new(spec.clone());
    let (p, n) = (spec.p, spec.n as usize);
    let mut rows: Vec<Vec<u64>> = Vec::with_capacity(n);
    let mut f = Vec::with_capacity(n);
    for enc in 1..field.order() {
        if f.len() == n {
            break;
        }
        let x = field.decode(enc).expect("in range");
        if !field.is_square(&x).expect("nonzero") {
            continue;
        }
        rows.push(x.coeffs().to_vec());
        if rank_mod_p(rows.clone(), p) == rows.len() {
            f.push(x);
        } else {
            rows.pop();
        }
    }
    SquareBasis { f }
}

/// `span{f_i : i in basis_indices}`, indexed by coordinates: the element with
/// coordinate code `e` is `Σ_j digit_j(e) · f_{basis_indices[j]}`.
#[derive(Debug, Clone)]
pub struct Subspace {
    pub basis_indices: Vec<usize>,
    pub elements: Vec<FieldElement>,
    encodings: Vec<u64>,
    p: u64,
}

impl Subspace {
    pub fn new(field: &Field, basis: &SquareBasis, basis_indices: Vec<usize>) -> Self {
        let p = field.characteristic();
        let mut elements = vec![field.zero()];
        // each new basis vector multiplies the element list by p, keeping code order
        for &i in &basis_indices {
            let step = &basis.f[i];
            let mut next = Vec::with_capacity(elements.len() * p as usize);
            for c in 0..p {
                let shift = field.scale(c, step);
                next.extend(elements.iter().map(|x| field.add(x, &shift)));
            }
            elements = next;
        }
        let encodings = elements.iter().map(|x| field.encode(x)).collect();
        Self { basis_indices, elements, encodings, p }
    }

    pub fn dimension(&self) -> u32 {
        self.basis_indices.len() as u32
    }

    pub fn order(&self) -> u64 {
        self.elements.len() as u64
    }

    /// Field encoding of the element with coordinate code `e`.
    pub fn encoding(&self, e: u64) -> u64 {
        self.encodings[e as usize]
    }

    pub fn characteristic(&self) -> u64 {
        self.p
    }
}

/// The subgraph of `g` induced on `w`, as a Cayley graph of `(Z/p)^d` in coordinates.
pub fn induced_subgraph(g: &CayleyGraph, w: &Subspace) -> Result<CayleyGraph, PaleyError> {
    let set = (1..w.order()).filter(|&e| g.contains_difference(w.encoding(e)));
    let label = format!("{}[span{:?}]", g.label(), w.basis_indices);
    Ok(CayleyGraph::new(Group::Elementary { p: w.p, d: w.dimension() }, set, label)?)
}

/// Hamiltonian path of `G_{W*_i}` in coordinates of `span{f₁..f_i}`.
fn wstar_path_coords(field: &Field, g: &CayleyGraph, basis: &SquareBasis, i: usize) -> Result<Vec<u64>, PaleyError> {
    let p = field.characteristic();
    let mut path: Vec<u64> = (0..p).collect();
    let m = (p as usize - 1) / 2;
    let ham_cycle: Vec<u64> = (0..p).collect();
    for j in 1..i {
        let below = Subspace::new(field, basis, (1..=j).collect());
        let fibre = Subspace::new(field, basis, vec![j + 1]);
        let g_below = induced_subgraph(g, &below)?;
        let g_fibre = induced_subgraph(g, &fibre)?;
        let n = path.len();
        let snake = product_cycles::snake_cycle(m, n, n)?;
        let shift = below.order();
        path = product_cycles::lift_pairs(&snake, &g_fibre, &ham_cycle, &g_below, &path)?
            .into_iter()
            .map(|(c, e)| e + c * shift)
            .collect();
    }
    Ok(path)
}

/// Hamiltonian path of the subgraph of `P(q)` induced on `span{f₁..f_i}`, as field
/// encodings. Built by lifting the full snake through `f_{j+1}`-cycles and dropping
/// its closing edge.
pub fn semi_hamiltonian_path_wstar(spec: &FieldSpec, basis: &SquareBasis, i: usize) -> Result<Vec<u64>, PaleyError> {
    let max = basis.len().saturating_sub(1);
    if i < 1 || i > max {
        return Err(PaleyError::SubspaceIndex { i, max });
    }
    let field = Field::new(spec.clone());
    let g = graph::paley(spec)?;
    let coords = wstar_path_coords(&field, &g, basis, i)?;
    let w = Subspace::new(&field, basis, (1..=i).collect());
    Ok(coords.into_iter().map(|e| w.encoding(e)).collect())
}

fn check(cert: CycleCertificate) -> Result<CycleCertificate, PaleyError> {
    let report = verify::check_cycle(&cert)?;
    if report.is_ok() {
        Ok(cert)
    } else {
        Err(PaleyError::Unverified { k: cert.k, report: report.to_string() })
    }
}

fn retag(cert: &CycleCertificate, g: &CayleyGraph, vertices: Vec<u64>, prefix: &str) -> CycleCertificate {
    CycleCertificate::new(g.descriptor(), vertices, format!("{prefix}/{}", cert.construction))
}

/// Cycles of lengths `3..=p` in `W₀ = GF(p)·f₀` of `P(pⁿ)`, `p ≠ 5`.
pub fn w0_pancyclic_certificates(spec: &FieldSpec, basis: &SquareBasis) -> Result<Vec<CycleCertificate>, PaleyError> {
    let p = spec.p;
    if p == 5 {
        return Err(PaleyError::FiveSubfield);
    }
    let field = Field::new(spec.clone());
    let g = graph::paley(spec)?;
    let f0 = &basis.f[0];
    let to_field = |c: u64| field.encode(&field.scale(c, f0));
    let certs = if p % 4 == 1 {
        let small = graph::paley(&FieldSpec::for_order(p)?)?;
        cyclic_cycles::pancyclic_certificates(&small)?
            .iter()
            .map(|c| retag(c, &g, c.vertices.iter().map(|&v| to_field(v)).collect(), "subfield"))
            .collect()
    } else {
        (3..=p)
            .map(|k| CycleCertificate::new(g.descriptor(), (0..k).map(to_field).collect(), "subfield/complete"))
            .collect::<Vec<_>>()
    };
    certs.into_iter().map(check).collect()
}

/// First adjacent pair with a common neighbour gives `C₃`; first pair with two
/// common neighbours gives `C₄`.
fn common_neighbor_cycles(g: &CayleyGraph) -> Result<[CycleCertificate; 2], PaleyError> {
    let q = g.order();
    let pairs = || (0..q).flat_map(move |u| (u + 1..q).map(move |v| (u, v)));
    let mut triangle = None;
    let mut square = None;
    for (u, v) in pairs() {
        let common = g.common_neighbors(u, v)?;
        if triangle.is_none() && g.adjacent(u, v) && !common.is_empty() {
            triangle = Some(vec![u, v, common[0]]);
        }
        if square.is_none() && common.len() >= 2 {
            square = Some(vec![u, common[0], v, common[1]]);
        }
        if triangle.is_some() && square.is_some() {
            break;
        }
    }
    let missing = |k| PaleyError::Unverified { k, report: "no candidate pair".into() };
    Ok([
        CycleCertificate::new(g.descriptor(), triangle.ok_or_else(|| missing(3))?, "five-power/triangle"),
        CycleCertificate::new(g.descriptor(), square.ok_or_else(|| missing(4))?, "five-power/double-common-neighbor"),
    ])
}

#[derive(Debug, Clone)]
struct Lifting {
    field: Field,
    w0: Subspace,
    wstar: Subspace,
    g1: CayleyGraph,
    ham_cycle: Vec<u64>,
    g2: CayleyGraph,
    ham_path: Vec<u64>,
}

impl Lifting {
    fn certificate(&self, g: &CayleyGraph, len: usize) -> Result<CycleCertificate, PaleyError> {
        let m = (self.ham_cycle.len() - 1) / 2;
        let coords = product_cycles::product_cycle(m, self.ham_path.len(), len)?;
        let vertices = product_cycles::lift_pairs(&coords, &self.g1, &self.ham_cycle, &self.g2, &self.ham_path)?
            .into_iter()
            .map(|(c, e)| {
                let x = self.field.add(&self.w0.elements[c as usize], &self.wstar.elements[e as usize]);
                self.field.encode(&x)
            })
            .collect();
        Ok(CycleCertificate::new(g.descriptor(), vertices, "product/lifted-cylinder"))
    }
}

#[derive(Debug, Clone)]
enum Plan {
    Prime(NormalizedCyclicCayley),
    /// Cycles of length `3..=p` precomputed; longer ones lifted.
    Split { short: Vec<CycleCertificate>, lifting: Box<Lifting> },
}

/// Produces a verified `k`-cycle of `P(q)` for any `3 <= k <= q`.
#[derive(Debug, Clone)]
pub struct PaleyCertifier {
    spec: FieldSpec,
    graph: CayleyGraph,
    basis: SquareBasis,
    plan: Plan,
}

/// Rejects orders for which `P(q)` is undefined or not pancyclic.
pub fn check_order(q: u64) -> Result<(u64, u32), PaleyError> {
    let (p, n) = prime_power(q).ok_or(PaleyError::NotPrimePower(q))?;
    if q % 4 != 1 {
        return Err(PaleyError::NotOneModFour(q));
    }
    if q == 5 {
        return Err(PaleyError::PaleyFive);
    }
    Ok((p, n))
}

impl PaleyCertifier {
    pub fn for_order(q: u64) -> Result<Self, PaleyError> {
        check_order(q)?;
        Self::new(&FieldSpec::for_order(q)?)
    }

    pub fn new(spec: &FieldSpec) -> Result<Self, PaleyError> {
        let (p, n) = (spec.p, spec.n);
        check_order(spec.order())?;
        let graph = graph::paley(spec)?;
        let basis = square_basis(spec);
        if n == 1 {
            let norm = cyclic_cycles::normalize(&graph)?;
            cyclic_cycles::check_hypotheses(&norm)?;
            return Ok(Self { spec: spec.clone(), graph, basis, plan: Plan::Prime(norm) });
        }

        let field = Field::new(spec.clone());
        let (short, ham_cycle) = if p == 5 {
            let [c3, c4] = common_neighbor_cycles(&graph)?;
            let f0 = &basis.f[0];
            let pentagon = (0..5).map(|c| field.encode(&field.scale(c, f0))).collect();
            let c5 = CycleCertificate::new(graph.descriptor(), pentagon, "five-power/subfield-pentagon");
            let short = [c3, c4, c5].into_iter().map(check).collect::<Result<Vec<_>, _>>()?;
            (short, (0..5).collect::<Vec<u64>>())
        } else {
            let short = w0_pancyclic_certificates(spec, &basis)?;
            // f₀ = 1, so W₀ coordinates coincide with field encodings
            let ham = short.last().expect("p >= 3").vertices.clone();
            (short, ham)
        };
        let w0 = Subspace::new(&field, &basis, vec![0]);
        let wstar = Subspace::new(&field, &basis, (1..n as usize).collect());
        let lifting = Lifting {
            g1: induced_subgraph(&graph, &w0)?,
            g2: induced_subgraph(&graph, &wstar)?,
            ham_path: wstar_path_coords(&field, &graph, &basis, n as usize - 1)?,
            field,
            w0,
            wstar,
            ham_cycle,
        };
        Ok(Self { spec: spec.clone(), graph, basis, plan: Plan::Split { short, lifting: Box::new(lifting) } })
    }

    pub fn spec(&self) -> &FieldSpec {
        &self.spec
    }

    pub fn graph(&self) -> &CayleyGraph {
        &self.graph
    }

    pub fn basis(&self) -> &SquareBasis {
        &self.basis
    }

    pub fn order(&self) -> u64 {
        self.spec.order()
    }

    /// A verified `k`-cycle.
    pub fn certify(&self, k: u64) -> Result<CycleCertificate, PaleyError> {
        let q = self.order();
        if k < 3 || k > q {
            return Err(PaleyError::LengthOutOfRange { k, max: q });
        }
        let cert = match &self.plan {
            Plan::Prime(norm) => {
                let c = cyclic_cycles::normalized_cycle(norm, k)?;
                let c = cyclic_cycles::denormalize(norm, &self.graph, &c);
                let vertices = c.vertices.clone();
                retag(&c, &self.graph, vertices, "prime-field")
            }
            Plan::Split { short, lifting } => match short.get(k as usize - 3) {
                Some(c) => c.clone(),
                None => lifting.certificate(&self.graph, k as usize)?,
            },
        };
        check(cert)
    }

    /// The length-`p` cycle from the lifted branch, which overlaps the last short cycle.
    pub fn overlap_certificate(&self) -> Result<Option<CycleCertificate>, PaleyError> {
        match &self.plan {
            Plan::Prime(_) => Ok(None),
            Plan::Split { lifting, .. } => check(lifting.certificate(&self.graph, self.spec.p as usize)?).map(Some),
        }
    }
}

/// Verified certificates for every `k = 3..=q`, sorted by `k`.
pub fn paley_pancyclic(q: u64) -> Result<Vec<CycleCertificate>, PaleyError> {
    let certifier = PaleyCertifier::for_order(q)?;
    certifier.overlap_certificate()?;
    (3..=q).map(|k| certifier.certify(k)).collect()
}

/// Smallest prime power `q >= n` with `q ≡ 1 (mod 4)`.
#[allow(non_snake_case)]
pub fn ceil_F(n: u64) -> u64 {
    (n.max(1)..)
        .find(|&q| q % 4 == 1 && prime_power(q).is_some())
        .expect("primes 1 mod 4 are unbounded")
}

#[derive(Debug, Clone)]
pub struct PaleyIndexResult {
    pub n: u64,
    pub rho: u64,
    pub witness: CycleCertificate,
}

/// Smallest `q` with `C_n` a subgraph of `P(q)`, with an embedding.
pub fn paley_index_of_cycle(n: u64) -> Result<PaleyIndexResult, PaleyError> {
    let (rho, witness) = match n {
        0..=2 => return Err(PaleyError::IndexTooSmall(n)),
        3 | 4 => (9, PaleyCertifier::for_order(9)?.certify(n)?),
        5 => {
            let g = graph::paley(&FieldSpec::for_order(5)?)?;
            (5, check(CycleCertificate::new(g.descriptor(), (0..5).collect(), "index/pentagon"))?)
        }
        _ => {
            let rho = ceil_F(n);
            (rho, PaleyCertifier::for_order(rho)?.certify(n)?)
        }
    };
    Ok(PaleyIndexResult { n, rho, witness })
}
