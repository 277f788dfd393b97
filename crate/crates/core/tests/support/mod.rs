//! Shared oracles and generators for the integration suites. Everything in
//! here is kept independent of the library's fast paths: brute-force scans
//! over all 2^n vertex subsets, first-principles order-ideal searches, and a
//! direct antichain enumerator. The suites assert that the optimized
//! implementations reproduce these answers exactly.

#![allow(dead_code)]

use hvec_core::{Face, SimplicialComplex};
use rand::Rng;
use std::sync::OnceLock;

/// Complexes on exactly n labeled vertices, i.e. antichains of nonempty
/// subsets of {1,...,n} whose union is the whole vertex set. Derived by
/// inclusion-exclusion over the vertex support from the nonempty-antichain
/// counts 1, 4, 18, 166, 7579, 7828352 (Dedekind numbers minus two).
pub const COMPLEX_COUNTS: [u64; 6] = [1, 2, 9, 114, 6894, 7_785_062];

/// Visits every simplicial complex on exactly `n` labeled vertices, in a
/// fixed deterministic order. The facet family handed to `visit` is sorted
/// ascending by mask.
pub fn for_each_complex(n: u32, visit: &mut impl FnMut(&SimplicialComplex)) {
    assert!((1..=6).contains(&n), "enumeration is meant for small n");
    let full: u64 = (1 << n) - 1;
    let count = full as usize;

    // compatible[i]: bit j set when masks i+1 and j+1 are incomparable, so
    // both can sit in one antichain; picking i intersects the candidates
    // with this set.
    let mut compatible = vec![0u64; count];
    for (i, slot) in compatible.iter_mut().enumerate() {
        let a = (i + 1) as u64;
        for j in 0..count {
            let b = (j + 1) as u64;
            if a & b != a && a & b != b {
                *slot |= 1 << j;
            }
        }
    }

    let mut facets: Vec<Face> = Vec::new();
    let all_candidates = if count == 64 { u64::MAX } else { (1 << count) - 1 };
    dfs(all_candidates, full, &compatible, &mut facets, visit);

    fn dfs(
        allowed: u64,
        full: u64,
        compatible: &[u64],
        facets: &mut Vec<Face>,
        visit: &mut impl FnMut(&SimplicialComplex),
    ) {
        let mut rest = allowed;
        while rest != 0 {
            let i = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            facets.push(Face::from_mask((i + 1) as u64));
            let union: u64 = facets.iter().map(|f| f.mask()).fold(0, |a, f| a | f);
            if union == full {
                let n = full.count_ones();
                let cx = SimplicialComplex::from_faces(n, facets.clone())
                    .expect("enumerated antichains are valid facet families");
                visit(&cx);
            }
            dfs(rest & compatible[i], full, compatible, facets, visit);
            facets.pop();
        }
    }
}

/// Counts the complexes on exactly n vertices by running the enumerator.
pub fn complex_count(n: u32) -> u64 {
    let mut count = 0u64;
    for_each_complex(n, &mut |_| count += 1);
    count
}

/// f-vector by scanning all 2^n subsets against the facet list.
pub fn brute_f_vector(cx: &SimplicialComplex) -> Vec<i64> {
    let n = cx.n();
    let mut counts = vec![0i64; cx.d() as usize + 1];
    for mask in 0..(1u64 << n) {
        if cx.facets().iter().any(|f| mask & !f.mask() == 0) {
            counts[mask.count_ones() as usize] += 1;
        }
    }
    counts
}

/// Minimal nonfaces by scanning all 2^n subsets: a nonface all of whose
/// maximal proper subsets are faces.
pub fn brute_minimal_nonfaces(cx: &SimplicialComplex) -> Vec<Face> {
    let n = cx.n();
    let is_face = |mask: u64| cx.facets().iter().any(|f| mask & !f.mask() == 0);
    let mut out: Vec<Face> = (1..(1u64 << n))
        .filter(|&mask| {
            if is_face(mask) {
                return false;
            }
            let mut rest = mask;
            while rest != 0 {
                let bit = rest & rest.wrapping_neg();
                rest &= rest - 1;
                if !is_face(mask & !bit) {
                    return false;
                }
            }
            true
        })
        .map(Face::from_mask)
        .collect();
    out.sort();
    out
}

/// Reduced Euler characteristic straight from the subset scan: the empty
/// face sits in entry 0 and carries sign (-1)^(-1).
pub fn brute_reduced_euler(cx: &SimplicialComplex) -> i64 {
    brute_f_vector(cx)
        .iter()
        .enumerate()
        .map(|(card, &count)| if card % 2 == 0 { -count } else { count })
        .sum()
}

/// Minimal vertex covers of a graph given as an edge list, by scanning all
/// 2^n vertex subsets.
pub fn brute_minimal_covers(n: u32, edges: &[(u32, u32)]) -> Vec<Face> {
    let covers: Vec<u64> = (0..(1u64 << n))
        .filter(|&s| edges.iter().all(|&(u, v)| s >> (u - 1) & 1 == 1 || s >> (v - 1) & 1 == 1))
        .collect();
    let mut out: Vec<Face> = covers
        .iter()
        .filter(|&&s| !covers.iter().any(|&t| t != s && t & !s == 0))
        .map(|&s| Face::from_mask(s))
        .collect();
    out.sort();
    out
}

// Order-ideal existence tables. A vector (a_0, ..., a_k) is realized by a
// down-closed set of monomials with a_i monomials in degree i. Every
// variable of such an ideal shows up in degree 1, so a_1 variables suffice.

/// Degree-2 monomials on v variables as (i, j) index pairs with i <= j.
fn degree2_monomials(v: usize) -> Vec<(usize, usize)> {
    (0..v).flat_map(|i| (i..v).map(move |j| (i, j))).collect()
}

/// Degree-3 monomials on v variables as index triples i <= j <= k.
fn degree3_monomials(v: usize) -> Vec<(usize, usize, usize)> {
    (0..v).flat_map(|i| (i..v).flat_map(move |j| (j..v).map(move |k| (i, j, k)))).collect()
}

/// max_deg3()[v][s] is the largest possible number of degree-3 monomials in
/// a down-closed set using v variables and exactly s degree-2 monomials, or
/// None when no s-subset of the degree-2 level exists. Built by scanning
/// every degree-2 subset of size <= 6 (larger sizes never arise in tests).
fn max_deg3() -> &'static Vec<Vec<Option<usize>>> {
    static TABLE: OnceLock<Vec<Vec<Option<usize>>>> = OnceLock::new();
    TABLE.get_or_init(|| {
        let mut table = Vec::new();
        for v in 0..=6usize {
            let m2 = degree2_monomials(v);
            let m3 = degree3_monomials(v);
            // For each degree-3 monomial, the set of degree-2 divisor
            // indices as a bitmask over m2.
            let divisors: Vec<u32> = m3
                .iter()
                .map(|&(i, j, k)| {
                    let mut mask = 0u32;
                    for d in [(i, j), (i, k), (j, k)] {
                        let pos = m2.iter().position(|&p| p == d).unwrap();
                        mask |= 1 << pos;
                    }
                    mask
                })
                .collect();
            let mut best: Vec<Option<usize>> = vec![None; m2.len() + 1];
            for_each_subset_up_to(m2.len(), 6, &mut |s: u32| {
                let size = s.count_ones() as usize;
                let reach = divisors.iter().filter(|&&d| d & !s == 0).count();
                let slot = &mut best[size];
                *slot = Some(slot.map_or(reach, |b| b.max(reach)));
            });
            table.push(best);
        }
        table
    })
}

/// Visits every subset of {0,...,m-1} with at most `limit` elements.
fn for_each_subset_up_to(m: usize, limit: usize, visit: &mut impl FnMut(u32)) {
    fn rec(next: usize, m: usize, left: usize, acc: u32, visit: &mut impl FnMut(u32)) {
        visit(acc);
        if left == 0 {
            return;
        }
        for i in next..m {
            rec(i + 1, m, left - 1, acc | 1 << i, visit);
        }
    }
    rec(0, m, limit, 0, visit);
}

/// Existence oracle for order ideals with the given level sizes, by direct
/// search. Supports lengths up to 4 with up to 6 variables, and length 5
/// with up to 3 variables; panics outside that range.
pub fn order_ideal_exists(levels: &[i64]) -> bool {
    if levels.is_empty() || levels[0] != 1 {
        return false;
    }
    if levels.iter().any(|&a| a < 0) {
        return false;
    }
    let a: Vec<usize> = levels.iter().map(|&x| x as usize).collect();
    if a.len() == 1 {
        return true;
    }
    let v = a[1];
    if v > 6 {
        panic!("oracle supports at most 6 variables");
    }
    if a.len() == 2 {
        return true;
    }
    let m2 = degree2_monomials(v).len();
    if a[2] > m2 {
        return false;
    }
    if a.len() == 3 {
        return true;
    }
    let table = &max_deg3()[v];
    if a.len() == 4 {
        assert!(a[2] <= 6, "the degree-2 table is only scanned up to 6 monomials");
        return table[a[2]].is_some_and(|best| best >= a[3]);
    }
    if a.len() == 5 {
        assert!(v <= 3, "length-5 vectors are only searched for up to 3 variables");
        return order_ideal_level5_exists(v, &a);
    }
    panic!("oracle supports lengths up to 5");
}

/// Full search for length-5 vectors on at most 3 variables: choose the
/// degree-2 and degree-3 levels explicitly and check how much of degree 4
/// stays reachable.
fn order_ideal_level5_exists(v: usize, a: &[usize]) -> bool {
    let m2 = degree2_monomials(v);
    let m3 = degree3_monomials(v);
    // Degree-4 monomials as sorted index quadruples.
    let m4: Vec<[usize; 4]> = (0..v)
        .flat_map(|i| {
            (i..v).flat_map(move |j| (j..v).flat_map(move |k| (k..v).map(move |l| [i, j, k, l])))
        })
        .collect();
    let div3: Vec<u32> = m3
        .iter()
        .map(|&(i, j, k)| {
            [(i, j), (i, k), (j, k)]
                .iter()
                .map(|d| 1u32 << m2.iter().position(|p| p == d).unwrap())
                .fold(0, |acc, b| acc | b)
        })
        .collect();
    let div4: Vec<u32> = m4
        .iter()
        .map(|&[i, j, k, l]| {
            [(i, j, k), (i, j, l), (i, k, l), (j, k, l)]
                .iter()
                .map(|d| 1u32 << m3.iter().position(|p| p == d).unwrap())
                .fold(0, |acc, b| acc | b)
        })
        .collect();
    if a[2] > m2.len() {
        return false;
    }
    let mut found = false;
    for_each_subset_up_to(m2.len(), a[2], &mut |s2: u32| {
        if found || s2.count_ones() as usize != a[2] {
            return;
        }
        let c3: Vec<usize> = (0..m3.len()).filter(|&t| div3[t] & !s2 == 0).collect();
        if c3.len() < a[3] {
            return;
        }
        for_each_subset_up_to(c3.len(), a[3], &mut |pick: u32| {
            if found || pick.count_ones() as usize != a[3] {
                return;
            }
            let s3: u32 = (0..c3.len())
                .filter(|&b| pick >> b & 1 == 1)
                .map(|b| 1u32 << c3[b])
                .fold(0, |x, y| x | y);
            let reach4 = div4.iter().filter(|&&d| d & !s3 == 0).count();
            if reach4 >= a[4] {
                found = true;
            }
        });
    });
    found
}

/// A random complex on up to `max_n` vertices: sample a handful of faces,
/// let the constructor absorb the non-maximal ones, and retry until every
/// vertex is covered.
pub fn sample_complex(rng: &mut impl Rng, max_n: u32) -> SimplicialComplex {
    let n = rng.gen_range(1..=max_n);
    sample_complex_on(rng, n)
}

/// Same, on exactly `n` vertices.
pub fn sample_complex_on(rng: &mut impl Rng, n: u32) -> SimplicialComplex {
    loop {
        let full = (1u64 << n) - 1;
        let count = rng.gen_range(1..=2 * n as usize);
        let faces: Vec<Face> =
            (0..count).map(|_| Face::from_mask(rng.gen_range(1..=full))).collect();
        if faces.iter().fold(0, |acc, f| acc | f.mask()) == full {
            return SimplicialComplex::from_faces(n, faces).expect("covering by construction");
        }
    }
}

/// A random pure codimension-2 complex (each facet omits exactly two
/// vertices), the universe of the graph-obstruction screen.
pub fn sample_codim2_complex(rng: &mut impl Rng, n: u32) -> SimplicialComplex {
    assert!(n >= 3);
    let full = (1u64 << n) - 1;
    loop {
        let count = rng.gen_range(1..=n as usize + 2);
        let faces: Vec<Face> = (0..count)
            .map(|_| {
                let u = rng.gen_range(1..=n);
                let v = loop {
                    let v = rng.gen_range(1..=n);
                    if v != u {
                        break v;
                    }
                };
                Face::from_mask(full & !(1 << (u - 1)) & !(1 << (v - 1)))
            })
            .collect();
        if faces.iter().fold(0, |acc, f| acc | f.mask()) == full {
            return SimplicialComplex::from_faces(n, faces).expect("covering by construction");
        }
    }
}
