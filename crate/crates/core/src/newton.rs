//! Newton polyhedra of finitely supported power series.
//!
//! A power series is abstracted to its support: the finite set of exponent
//! vectors with (generic) nonzero coefficients. Everything decided here —
//! membership of the all-ones point, leading supports, the search for a
//! weight inducing a plt blow-up — depends only on the support for
//! non-degenerate series, and callers are responsible for declaring their
//! inputs non-degenerate.

use std::collections::BTreeSet;

use num::{Integer, One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::dd;
use crate::error::{internal, precondition, usage, Result};
use crate::lattice::{pairing, Int, IntVec, Rat, Weight};

/// The finite support of a power series in `n >= 2` variables.
///
/// Points are exponent vectors with nonnegative entries; the zero vector is
/// rejected (a unit, not a singularity germ). Stored sorted and deduplicated.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SupportSet {
    n: usize,
    points: Vec<IntVec>,
}

/// JSON wire form: `{"n": 4, "support": [[2,0,0,0], ...]}`.
#[derive(Serialize, Deserialize)]
struct SupportSetWire {
    n: usize,
    support: Vec<Vec<Int>>,
}

impl SupportSet {
    pub fn new(n: usize, points: Vec<IntVec>) -> Result<Self> {
        if n < 2 {
            return Err(usage("support dimension must be at least 2"));
        }
        if points.is_empty() {
            return Err(usage("support must be nonempty"));
        }
        for p in &points {
            if p.dim() != n {
                return Err(usage(format!(
                    "ragged support: point {p} does not have dimension {n}"
                )));
            }
            if !p.is_nonnegative() {
                return Err(usage(format!("support point {p} has a negative entry")));
            }
            if p.is_zero() {
                return Err(usage(
                    "support contains the zero exponent (a unit, not a singularity)",
                ));
            }
        }
        let set: BTreeSet<IntVec> = points.into_iter().collect();
        Ok(SupportSet {
            n,
            points: set.into_iter().collect(),
        })
    }

    pub fn from_rows(n: usize, rows: &[&[i64]]) -> Result<Self> {
        Self::new(n, rows.iter().map(|r| IntVec::from_i64(r)).collect())
    }

    /// Diagonal support `x_1^{a_1} + ... + x_n^{a_n}`.
    pub fn brieskorn(exponents: &[u64]) -> Result<Self> {
        let n = exponents.len();
        if n < 2 {
            return Err(usage("a diagonal support needs at least 2 exponents"));
        }
        if exponents.iter().any(|&a| a == 0) {
            return Err(usage("diagonal exponents must be positive"));
        }
        let mut pts = Vec::with_capacity(n);
        for (i, &a) in exponents.iter().enumerate() {
            let mut v = vec![Int::zero(); n];
            v[i] = Int::from(a);
            pts.push(IntVec::new(v)?);
        }
        Self::new(n, pts)
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn points(&self) -> &[IntVec] {
        &self.points
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn contains_point(&self, p: &IntVec) -> bool {
        self.points.binary_search(p).is_ok()
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "n": self.n,
            "support": self.points.iter().map(|p| p.entries().to_vec()).collect::<Vec<_>>(),
        })
    }

    pub fn from_json(v: &serde_json::Value) -> Result<Self> {
        let wire: SupportSetWire = serde_json::from_value(v.clone())
            .map_err(|e| usage(format!("malformed support JSON: {e}")))?;
        let points = wire
            .support
            .into_iter()
            .map(IntVec::new)
            .collect::<Result<Vec<_>>>()?;
        Self::new(wire.n, points)
    }
}

/// Where a point sits relative to the polyhedron.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum MembershipVerdict {
    Outside,
    Boundary,
    Interior,
}

impl std::fmt::Display for MembershipVerdict {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let s = match self {
            MembershipVerdict::Outside => "outside",
            MembershipVerdict::Boundary => "boundary",
            MembershipVerdict::Interior => "interior",
        };
        f.write_str(s)
    }
}

/// A half-space `{ x : <normal, x> >= offset }` with primitive nonnegative
/// normal.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Facet {
    pub normal: IntVec,
    pub offset: Int,
}

impl Facet {
    /// Sign of `<normal, x> - offset` at an integer point.
    pub fn excess(&self, x: &IntVec) -> Int {
        pairing(&self.normal, x).expect("dimension checked by constructor") - &self.offset
    }

    pub fn excess_rat(&self, x: &[Rat]) -> Rat {
        let mut acc = Rat::from_integer(-self.offset.clone());
        for (c, xi) in self.normal.iter().zip(x.iter()) {
            acc += Rat::from_integer(c.clone()) * xi;
        }
        acc
    }
}

/// Facet description of the Newton polyhedron of a support set.
#[derive(Debug, Clone)]
pub struct NewtonPolyhedron {
    support: SupportSet,
    facets: Vec<Facet>,
}

impl NewtonPolyhedron {
    pub fn support(&self) -> &SupportSet {
        &self.support
    }

    pub fn facets(&self) -> &[Facet] {
        &self.facets
    }

    pub fn classify_point(&self, x: &IntVec) -> MembershipVerdict {
        let mut boundary = false;
        for f in &self.facets {
            let e = f.excess(x);
            if e.is_negative() {
                return MembershipVerdict::Outside;
            }
            if e.is_zero() {
                boundary = true;
            }
        }
        if boundary {
            MembershipVerdict::Boundary
        } else {
            MembershipVerdict::Interior
        }
    }

    pub fn contains_rat(&self, x: &[Rat]) -> bool {
        self.facets.iter().all(|f| !f.excess_rat(x).is_negative())
    }
}

/// Minimum of `<p, m>` over the support points.
pub fn weight_value(f: &SupportSet, p: &IntVec) -> Result<Int> {
    if p.dim() != f.dim() {
        return Err(usage(format!(
            "weight dimension {} does not match support dimension {}",
            p.dim(),
            f.dim()
        )));
    }
    if !p.is_nonnegative() {
        return Err(usage("weight vector must be nonnegative"));
    }
    f.points()
        .iter()
        .map(|m| pairing(p, m))
        .collect::<Result<Vec<_>>>()
        .map(|vals| vals.into_iter().min().expect("support nonempty"))
}

/// The sub-support attaining the minimum of `<p, .>` (support of the leading
/// term with respect to `p`).
pub fn leading_support(f: &SupportSet, p: &IntVec) -> Result<SupportSet> {
    let min = weight_value(f, p)?;
    let pts = f
        .points()
        .iter()
        .filter(|m| pairing(p, m).expect("dims checked") == min)
        .cloned()
        .collect();
    SupportSet::new(f.dim(), pts)
}

/// Facet enumeration of `conv(union of (m + orthant))` by double description
/// on the homogenization cone.
pub fn facet_enumeration(f: &SupportSet) -> NewtonPolyhedron {
    let n = f.dim();
    let d = n + 1;

    // Generators of the homogenization cone, used as dual constraints:
    // first the n recession directions (e_j, 0), then the points (m, 1).
    let mut constraints: Vec<Vec<Int>> = Vec::with_capacity(n + f.len());
    for j in 0..n {
        let mut c = vec![Int::zero(); d];
        c[j] = Int::one();
        constraints.push(c);
    }
    for m in f.points() {
        let mut c: Vec<Int> = m.entries().to_vec();
        c.push(Int::one());
        constraints.push(c);
    }

    // The n recession constraints plus the first point form an invertible
    // block whose dual simplicial cone has closed-form extreme rays.
    let basis: Vec<usize> = (0..n).chain(std::iter::once(n)).collect();
    let m0 = f.points()[0].entries();
    let mut initial: Vec<Vec<Int>> = Vec::with_capacity(d);
    for j in 0..n {
        let mut r = vec![Int::zero(); d];
        r[j] = Int::one();
        r[n] = -m0[j].clone();
        initial.push(r);
    }
    let mut at_infinity = vec![Int::zero(); d];
    at_infinity[n] = Int::one();
    initial.push(at_infinity);

    let rays = dd::extreme_rays(&constraints, &basis, initial);

    let mut facets: Vec<Facet> = Vec::new();
    for ray in rays {
        let (alpha, last) = ray.split_at(n);
        if alpha.iter().all(|c| c.is_zero()) {
            // Hyperplane at infinity; not a facet of the polyhedron.
            continue;
        }
        let g = alpha.iter().fold(Int::zero(), |acc, c| acc.gcd(c));
        let normal = IntVec::new(alpha.iter().map(|c| c / &g).collect()).expect("n >= 2");
        let offset_num = -last[0].clone();
        debug_assert!((&offset_num % &g).is_zero());
        let offset = offset_num / g;
        facets.push(Facet { normal, offset });
    }
    facets.sort_by(|a, b| (&a.normal, &a.offset).cmp(&(&b.normal, &b.offset)));

    // Construction-time sanity: every support point satisfies every facet and
    // every facet is attained by some support point.
    for facet in &facets {
        let mut tight = false;
        for m in f.points() {
            let e = facet.excess(m);
            assert!(
                !e.is_negative(),
                "facet {:?} violated by support point {m}",
                facet
            );
            tight |= e.is_zero();
        }
        assert!(tight, "facet {:?} not attained by any support point", facet);
    }

    NewtonPolyhedron {
        support: f.clone(),
        facets,
    }
}

/// Position of the all-ones point: interior means the singularity is
/// canonical, boundary strictly log-canonical, outside not log-canonical.
pub fn classify_one(f: &SupportSet) -> MembershipVerdict {
    let poly = facet_enumeration(f);
    poly.classify_point(&IntVec::all_ones(f.dim()))
}

/// Searches the compact faces of the Newton polyhedron for a weight whose
/// leading support is again canonical, i.e. a weight inducing a plt blow-up.
///
/// Candidate weights are the canonical interior normals of compact faces
/// (the primitive sum of the normals of the facets through each face);
/// among those that qualify, the lexicographically least is returned.
pub fn find_plt_weight(f: &SupportSet) -> Result<Weight> {
    if classify_one(f) != MembershipVerdict::Interior {
        return Err(precondition(
            "plt-weight search requires a canonical input: the all-ones point \
             must be interior to the Newton polyhedron",
        ));
    }
    let poly = facet_enumeration(f);
    let n = f.dim();

    // Active facet sets of the support points, then close under pairwise
    // intersection: this yields the active set of every compact face.
    let point_active: Vec<BTreeSet<usize>> = f
        .points()
        .iter()
        .map(|m| {
            poly.facets()
                .iter()
                .enumerate()
                .filter(|(_, facet)| facet.excess(m).is_zero())
                .map(|(i, _)| i)
                .collect()
        })
        .collect();

    let mut closed: BTreeSet<BTreeSet<usize>> = point_active.iter().cloned().collect();
    loop {
        let mut fresh: Vec<BTreeSet<usize>> = Vec::new();
        for a in &closed {
            for b in &closed {
                let inter: BTreeSet<usize> = a.intersection(b).cloned().collect();
                if !closed.contains(&inter) {
                    fresh.push(inter);
                }
            }
        }
        if fresh.is_empty() {
            break;
        }
        closed.extend(fresh);
    }

    let mut candidates: BTreeSet<IntVec> = BTreeSet::new();
    for active in &closed {
        if active.is_empty() {
            continue;
        }
        let mut sum = vec![Int::zero(); n];
        for &i in active {
            for (s, c) in sum.iter_mut().zip(poly.facets()[i].normal.iter()) {
                *s += c;
            }
        }
        let sum = IntVec::new(sum)?;
        if sum.is_positive() {
            candidates.insert(sum.primitive());
        }
    }

    let mut qualifying: Vec<IntVec> = Vec::new();
    for cand in candidates {
        let lead = leading_support(f, &cand)?;
        if classify_one(&lead) == MembershipVerdict::Interior {
            qualifying.push(cand);
        }
    }
    qualifying.sort();
    match qualifying.into_iter().next() {
        Some(w) => Weight::new(w),
        None => Err(internal(
            "no compact face of a canonical support yielded a plt weight",
        )),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::rat;
    use crate::lp::contains_lp;

    fn brieskorn(a: &[u64]) -> SupportSet {
        SupportSet::brieskorn(a).unwrap()
    }

    #[test]
    fn weight_value_examples() {
        let f = brieskorn(&[2, 3, 5]);
        assert_eq!(
            weight_value(&f, &IntVec::from_i64(&[15, 10, 6])).unwrap(),
            Int::from(30)
        );
        assert_eq!(
            weight_value(&f, &IntVec::from_i64(&[1, 0, 0])).unwrap(),
            Int::from(0)
        );
        let g = brieskorn(&[2, 3, 7, 41]);
        assert_eq!(
            weight_value(&g, &IntVec::from_i64(&[861, 574, 246, 42])).unwrap(),
            Int::from(1722)
        );
        assert!(weight_value(&g, &IntVec::from_i64(&[1, 1])).is_err());
    }

    #[test]
    fn leading_support_examples() {
        let f = SupportSet::from_rows(3, &[&[3, 0, 0], &[0, 4, 0], &[0, 0, 4], &[0, 1, 3]])
            .unwrap();
        let lead = leading_support(&f, &IntVec::from_i64(&[1, 1, 1])).unwrap();
        assert_eq!(lead.points(), &[IntVec::from_i64(&[3, 0, 0])]);

        let zero = IntVec::from_i64(&[0, 0, 0]);
        assert_eq!(leading_support(&f, &zero).unwrap(), f);

        let b = brieskorn(&[2, 3, 5]);
        let lead = leading_support(&b, &IntVec::from_i64(&[15, 10, 6])).unwrap();
        assert_eq!(lead, b);
    }

    #[test]
    fn facet_enumeration_examples() {
        let f = SupportSet::from_rows(2, &[&[2, 0], &[0, 2]]).unwrap();
        let poly = facet_enumeration(&f);
        let facets: Vec<(Vec<i64>, i64)> = vec![(vec![0, 1], 0), (vec![1, 0], 0), (vec![1, 1], 2)];
        let got: Vec<(Vec<Int>, Int)> = poly
            .facets()
            .iter()
            .map(|fc| (fc.normal.entries().to_vec(), fc.offset.clone()))
            .collect();
        let expect: Vec<(Vec<Int>, Int)> = facets
            .into_iter()
            .map(|(n, o)| (n.into_iter().map(Int::from).collect(), Int::from(o)))
            .collect();
        assert_eq!(got, expect);

        // Translated orthant from a single point.
        let single = SupportSet::from_rows(4, &[&[1, 0, 0, 0]]).unwrap();
        let poly = facet_enumeration(&single);
        assert_eq!(poly.facets().len(), 4);
        for fc in poly.facets() {
            let ones: Int = fc.normal.iter().filter(|c| c.is_one()).sum();
            assert_eq!(ones, Int::one());
        }
        assert_eq!(
            poly.classify_point(&IntVec::from_i64(&[1, 0, 0, 0])),
            MembershipVerdict::Boundary
        );

        // Unique compact facet of a diagonal support.
        let b = brieskorn(&[2, 3, 5]);
        let poly = facet_enumeration(&b);
        let compact: Vec<&Facet> = poly
            .facets()
            .iter()
            .filter(|fc| fc.normal.is_positive())
            .collect();
        assert_eq!(compact.len(), 1);
        assert_eq!(compact[0].normal, IntVec::from_i64(&[15, 10, 6]));
        assert_eq!(compact[0].offset, Int::from(30));
    }

    #[test]
    fn classify_one_examples() {
        assert_eq!(
            classify_one(&brieskorn(&[2, 3, 7, 41])),
            MembershipVerdict::Interior
        );
        assert_eq!(
            classify_one(&brieskorn(&[2, 3, 7, 42])),
            MembershipVerdict::Boundary
        );
        assert_eq!(
            classify_one(&brieskorn(&[2, 3, 7, 43])),
            MembershipVerdict::Outside
        );
    }

    #[test]
    fn find_plt_weight_examples() {
        let w = find_plt_weight(&brieskorn(&[2, 3, 5])).unwrap();
        assert_eq!(w.as_vec(), &IntVec::from_i64(&[15, 10, 6]));

        let w = find_plt_weight(&brieskorn(&[2, 3, 7, 41])).unwrap();
        assert_eq!(w.as_vec(), &IntVec::from_i64(&[861, 574, 246, 42]));

        let f = SupportSet::from_rows(3, &[&[2, 0, 0], &[0, 3, 0], &[0, 0, 5], &[1, 1, 1]])
            .unwrap();
        let w = find_plt_weight(&f).unwrap();
        let lead = leading_support(&f, w.as_vec()).unwrap();
        assert_eq!(classify_one(&lead), MembershipVerdict::Interior);
        assert_eq!(w.as_vec(), &IntVec::from_i64(&[15, 10, 6]));

        // Non-canonical input is a precondition error.
        assert!(find_plt_weight(&brieskorn(&[2, 3, 7, 43])).is_err());
    }

    #[test]
    fn facets_agree_with_lp_membership() {
        let f = SupportSet::from_rows(3, &[&[2, 0, 0], &[0, 3, 0], &[0, 0, 5], &[1, 1, 1]])
            .unwrap();
        let poly = facet_enumeration(&f);
        // A small deterministic grid of rational points.
        for ax in -1..6 {
            for ay in -1..6 {
                for az in -1..6 {
                    let x = vec![
                        rat(2 * ax + 1, 2),
                        rat(3 * ay + 1, 3),
                        rat(5 * az + 2, 5),
                    ];
                    assert_eq!(poly.contains_rat(&x), contains_lp(&f, &x));
                }
            }
        }
    }

    #[test]
    fn support_validation() {
        assert!(SupportSet::from_rows(2, &[]).is_err());
        assert!(SupportSet::from_rows(2, &[&[0, 0]]).is_err());
        assert!(SupportSet::from_rows(2, &[&[1, -1]]).is_err());
        assert!(SupportSet::new(2, vec![IntVec::from_i64(&[1, 2, 3])]).is_err());
        assert!(SupportSet::from_rows(1, &[&[1]]).is_err());

        let v = serde_json::json!({"n": 2, "support": [[2,0],[0,2]]});
        let f = SupportSet::from_json(&v).unwrap();
        assert_eq!(f.len(), 2);
        let ragged = serde_json::json!({"n": 2, "support": [[2,0],[0,2,1]]});
        assert!(SupportSet::from_json(&ragged).is_err());
    }
}
