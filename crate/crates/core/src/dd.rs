//! Double-description enumeration of the extreme rays of a polyhedral cone
//! `{ a : <g_i, a> >= 0 for all i }` given by integer constraint vectors.
//!
//! The cones handled here are duals of `cone{(m, 1)} + cone{(e_j, 0)}` for a
//! support set, so they are pointed and full-dimensional and the constraint
//! list always contains an invertible initial block. Arithmetic stays in
//! `BigInt` throughout: ray combinations of integer rays are integer.
//!
//! Adjacency uses the combinatorial test: rays `u`, `v` adjacent iff no third
//! ray is tight on every processed constraint tight on both.

use num::{BigInt, Integer, Signed, Zero};

use crate::lattice::{int_sign, Int};

#[derive(Debug, Clone)]
struct Ray {
    v: Vec<Int>,
    /// Indices of processed constraints this ray is tight on.
    active: Vec<usize>,
}

fn dot(a: &[Int], b: &[Int]) -> Int {
    a.iter().zip(b.iter()).map(|(x, y)| x * y).sum()
}

fn make_primitive(v: &mut [Int]) {
    let g = v.iter().fold(Int::zero(), |acc, x| acc.gcd(x));
    if !g.is_zero() && !g.is_one() {
        for x in v.iter_mut() {
            *x = &*x / &g;
        }
    }
}

fn is_subset(small: &[usize], big: &[usize]) -> bool {
    // Both sorted.
    let mut it = big.iter();
    'outer: for s in small {
        for b in it.by_ref() {
            if b == s {
                continue 'outer;
            }
            if b > s {
                return false;
            }
        }
        return false;
    }
    true
}

fn sorted_intersection(a: &[usize], b: &[usize]) -> Vec<usize> {
    let mut out = Vec::new();
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            std::cmp::Ordering::Less => i += 1,
            std::cmp::Ordering::Greater => j += 1,
            std::cmp::Ordering::Equal => {
                out.push(a[i]);
                i += 1;
                j += 1;
            }
        }
    }
    out
}

/// Extreme rays of `{ a : <c, a> >= 0 for all c in constraints }`.
///
/// `basis` must index `dim` constraints whose matrix is invertible with the
/// property that the initial simplicial cone they cut out is described by
/// `initial_rays` (rays dual to the basis constraints). The caller provides
/// those rays explicitly; for our Newton cones they have a closed form.
pub fn extreme_rays(
    constraints: &[Vec<Int>],
    basis: &[usize],
    initial_rays: Vec<Vec<Int>>,
) -> Vec<Vec<Int>> {
    let dim = initial_rays
        .first()
        .map(|r| r.len())
        .expect("nonempty initial ray set");
    debug_assert_eq!(basis.len(), dim);

    let mut rays: Vec<Ray> = initial_rays
        .into_iter()
        .map(|mut v| {
            make_primitive(&mut v);
            Ray { v, active: vec![] }
        })
        .collect();

    // Track tightness for the basis constraints first.
    for ray in rays.iter_mut() {
        for &ci in basis {
            if dot(&ray.v, &constraints[ci]).is_zero() {
                ray.active.push(ci);
            }
        }
        ray.active.sort_unstable();
    }

    let mut processed: Vec<usize> = basis.to_vec();

    for (ci, c) in constraints.iter().enumerate() {
        if basis.contains(&ci) {
            continue;
        }
        let signs: Vec<(i32, Int)> = rays
            .iter()
            .map(|r| {
                let d = dot(&r.v, c);
                (int_sign(&d), d)
            })
            .collect();

        let has_neg = signs.iter().any(|(s, _)| *s < 0);
        if !has_neg {
            // Constraint redundant for the current cone: just record tightness.
            for (ray, (s, _)) in rays.iter_mut().zip(signs.iter()) {
                if *s == 0 {
                    ray.active.push(ci);
                    ray.active.sort_unstable();
                }
            }
            processed.push(ci);
            continue;
        }

        let mut next: Vec<Ray> = Vec::new();
        for (ray, (s, _)) in rays.iter().zip(signs.iter()) {
            if *s >= 0 {
                let mut kept = ray.clone();
                if *s == 0 {
                    kept.active.push(ci);
                    kept.active.sort_unstable();
                }
                next.push(kept);
            }
        }

        // Combine adjacent (+,-) pairs.
        for (i, (si, di)) in signs.iter().enumerate() {
            if *si <= 0 {
                continue;
            }
            for (j, (sj, dj)) in signs.iter().enumerate() {
                if *sj >= 0 {
                    continue;
                }
                let common = sorted_intersection(&rays[i].active, &rays[j].active);
                let adjacent = !rays.iter().enumerate().any(|(k, other)| {
                    k != i && k != j && is_subset(&common, &other.active)
                });
                if !adjacent {
                    continue;
                }
                // new = d_i * r_j - d_j * r_i  (note d_j < 0), tight on c.
                let mut v: Vec<Int> = rays[j]
                    .v
                    .iter()
                    .zip(rays[i].v.iter())
                    .map(|(vj, vi)| di * vj - dj * vi)
                    .collect();
                make_primitive(&mut v);
                debug_assert!(dot(&v, c).is_zero());
                let mut active = common;
                active.push(ci);
                active.sort_unstable();
                // Re-derive tightness exactly: combination can only be tight
                // where both parents are, plus the new constraint, so the
                // inherited set is already correct.
                next.push(Ray { v, active });
            }
        }

        rays = next;
        processed.push(ci);
    }

    debug_assert!(rays.iter().all(|r| {
        constraints.iter().all(|c| !dot(&r.v, c).is_negative())
    }));

    let mut out: Vec<Vec<Int>> = rays.into_iter().map(|r| r.v).collect();
    out.sort();
    out.dedup();
    out
}
