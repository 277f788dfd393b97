//! A family of pure complexes, one for each d >= 5, on n = d + 2 vertices:
//! the facets are the complements of {1, j} for 2 <= j <= d together with
//! the complement of {d+1, d+2}. Each member has h-vector
//! (1, 2, 1, ..., 1, -1), which passes every known numerical test for
//! h-vectors of (S_2) complexes, yet no (S_2) complex of the same dimension
//! and vertex count attains it. This module builds the family, computes its
//! Hilbert series through an independent inclusion-exclusion oracle, bundles
//! the verification steps into one report, and runs the exhaustive
//! nonexistence search over all pure candidates.

use rayon::prelude::*;
use serde::Serialize;

use crate::complex::{h_to_f, ComplexError, Face, HVector, SimplicialComplex};
use crate::graph::{s2_graph_obstruction, GraphError, ObstructionVerdict};
use crate::homology::FieldSpec;
use crate::hvector::{check_necessary_conditions, hilbert_from_f, hilbert_from_h, ConditionReport};
use crate::poly::{HilbertSeries, IntPolynomial, PolyError};
use crate::serre::{is_serre, SerreVerdict};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum FamilyError {
    #[error("the family starts at d = 5, got d = {0}")]
    DTooSmall(u32),
    #[error("d = {0} needs more than 64 vertices")]
    DTooLarge(u32),
    #[error("exhaustive search supports d = 5 and d = 6, got d = {0}")]
    SearchUnsupported(u32),
    #[error(transparent)]
    Complex(#[from] ComplexError),
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Poly(#[from] PolyError),
}

fn check_d(d: u32) -> Result<(), FamilyError> {
    if d < 5 {
        Err(FamilyError::DTooSmall(d))
    } else if d > 62 {
        Err(FamilyError::DTooLarge(d))
    } else {
        Ok(())
    }
}

/// The d-th member: a pure (d-1)-dimensional complex on d + 2 vertices with
/// d facets.
pub fn build_family(d: u32) -> Result<SimplicialComplex, FamilyError> {
    check_d(d)?;
    let n = d + 2;
    let full = Face::from_vertices(1..=n).expect("n <= 64");
    let mut facets: Vec<Face> = (2..=d).map(|j| full.remove(1).remove(j)).collect();
    facets.push(full.remove(d + 1).remove(d + 2));
    Ok(SimplicialComplex::from_faces(n, facets)?)
}

/// The h-vector every family member realizes: (1, 2, 1, ..., 1, -1).
pub fn expected_hvector(d: u32) -> Result<HVector, FamilyError> {
    check_d(d)?;
    let mut entries = vec![1i64, 2];
    entries.extend(std::iter::repeat_n(1, d as usize - 2));
    entries.push(-1);
    Ok(HVector::new(entries).expect("starts with 1"))
}

/// The three closed-form Hilbert series obtained by splitting the
/// Stanley-Reisner ideal of the d-th member as an intersection: the cover
/// ideal of the star on {1, ..., d} and the cover ideal of the edge
/// {d+1, d+2}. Stored in reduced form.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FamilyDecomposition {
    /// (1 - t^(d-1)) / (1 - t)^(d+1)
    pub star_quotient: HilbertSeries,
    /// 1 / (1 - t)^d
    pub edge_quotient: HilbertSeries,
    /// (1 - t^(d-1)) / (1 - t)^(d-1)
    pub sum_quotient: HilbertSeries,
}

impl FamilyDecomposition {
    /// Inclusion-exclusion: star + edge - sum, the Hilbert series of the
    /// member itself.
    pub fn combined(&self) -> Result<HilbertSeries, PolyError> {
        self.star_quotient.add(&self.edge_quotient)?.sub(&self.sum_quotient)
    }
}

pub fn family_decomposition(d: u32) -> Result<FamilyDecomposition, FamilyError> {
    check_d(d)?;
    let lead = IntPolynomial::one().sub(&IntPolynomial::monomial(1, d as usize - 1))?;
    Ok(FamilyDecomposition {
        star_quotient: HilbertSeries::new(lead.clone(), d + 1),
        edge_quotient: HilbertSeries::new(IntPolynomial::one(), d),
        sum_quotient: HilbertSeries::new(lead, d - 1),
    })
}

/// Hilbert series of the d-th member by the inclusion-exclusion route,
/// independent of any face enumeration.
pub fn family_hilbert_oracle(d: u32) -> Result<HilbertSeries, FamilyError> {
    Ok(family_decomposition(d)?.combined()?)
}

/// Everything checked about the d-th member in one report: the h-vector by
/// face enumeration against the closed form, the Hilbert series by three
/// routes, purity, the numerical conditions at r = 2, failure of (S_2) over
/// each requested field, and the graph obstruction.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CounterexampleReport {
    pub d: u32,
    pub hvector: HVector,
    pub expected: HVector,
    pub hvector_matches: bool,
    pub hilbert_from_faces: HilbertSeries,
    pub hilbert_oracle: HilbertSeries,
    pub hilbert_matches: bool,
    pub entries_nonzero: bool,
    pub pure: bool,
    pub conditions: ConditionReport,
    pub serre: Vec<SerreVerdict>,
    pub not_serre_all_fields: bool,
    pub obstruction: ObstructionVerdict,
    pub obstruction_fires: bool,
    pub all_pass: bool,
}

pub fn verify_counterexample(
    d: u32,
    fields: &[FieldSpec],
) -> Result<CounterexampleReport, FamilyError> {
    let cx = build_family(d)?;
    let expected = expected_hvector(d)?;
    let hvector = cx.h_vector();
    let hvector_matches = hvector == expected;

    let hilbert_from_faces = hilbert_from_f(&cx.f_vector())?;
    let hilbert_oracle = family_hilbert_oracle(d)?;
    let from_h = hilbert_from_h(&expected);
    let hilbert_matches = hilbert_from_faces == hilbert_oracle && from_h == hilbert_oracle;

    let entries_nonzero = hvector.entries().iter().all(|&h| h != 0);
    let pure = cx.is_pure();
    let conditions =
        check_necessary_conditions(&hvector, 2).expect("rank 2 is within range for d >= 5");

    let serre: Vec<SerreVerdict> = fields.iter().map(|&f| is_serre(&cx, 2, f)).collect();
    let not_serre_all_fields = !serre.is_empty() && serre.iter().all(|v| !v.satisfied);

    let obstruction = s2_graph_obstruction(&cx)?;
    let obstruction_fires = matches!(obstruction, ObstructionVerdict::NotS2 { .. });

    let all_pass = hvector_matches
        && hilbert_matches
        && entries_nonzero
        && pure
        && conditions.all_pass
        && not_serre_all_fields
        && obstruction_fires;

    Ok(CounterexampleReport {
        d,
        hvector,
        expected,
        hvector_matches,
        hilbert_from_faces,
        hilbert_oracle,
        hilbert_matches,
        entries_nonzero,
        pure,
        conditions,
        serre,
        not_serre_all_fields,
        obstruction,
        obstruction_fires,
        all_pass,
    })
}

/// One candidate complex from the search whose h-vector hits the target,
/// with its (S_2) verdicts over the search field and over the rationals.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SearchMatch {
    pub facets: Vec<Face>,
    pub verdict: SerreVerdict,
    pub rationals_verdict: SerreVerdict,
}

/// Outcome of the exhaustive search over all pure candidates of dimension
/// d - 1 on d + 2 vertices with d facets.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SearchReport {
    pub d: u32,
    pub field: FieldSpec,
    pub target: HVector,
    pub candidates_enumerated: u64,
    pub skipped_uncovered: u64,
    pub matches: Vec<SearchMatch>,
    pub s2_satisfiers: u64,
    pub family_found: bool,
    pub rationals_recheck_agrees: bool,
    /// With `check_all`: how many covering candidates satisfy (S_2)
    /// regardless of their h-vector.
    pub s2_satisfiers_all_candidates: Option<u64>,
}

/// Enumerates every set of d facets of cardinality d on d + 2 vertices,
/// keeps the candidates whose h-vector equals the family target, and runs
/// the (S_2) test on each match over `field` and again over the rationals.
/// Supported for d = 5 (20349 candidates) and d = 6 (376740 candidates).
/// The report is deterministic and independent of the worker count.
pub fn exhaustive_nonexistence_search(
    d: u32,
    field: FieldSpec,
    check_all: bool,
) -> Result<SearchReport, FamilyError> {
    check_d(d)?;
    if d > 6 {
        return Err(FamilyError::SearchUnsupported(d));
    }
    let n = d + 2;
    let full = (1u64 << n) - 1;
    let subsets = 1usize << n;
    let words = subsets.div_ceil(64);

    // All possible facets in lexicographic face order.
    let mut facet_masks: Vec<u64> = (0..1u64 << n).filter(|m| m.count_ones() == d).collect();
    facet_masks.sort_unstable_by_key(|&m| Face::from_mask(m));

    // Bitmap of all subsets of each facet, indexed by subset mask.
    let facet_subsets: Vec<Vec<u64>> = facet_masks
        .iter()
        .map(|&m| {
            let mut bm = vec![0u64; words];
            let mut sub = m;
            loop {
                bm[(sub / 64) as usize] |= 1 << (sub % 64);
                if sub == 0 {
                    break;
                }
                sub = (sub - 1) & m;
            }
            bm
        })
        .collect();

    // Classifier bitmaps: which subset indices have a given cardinality.
    let mut card_class = vec![vec![0u64; words]; n as usize + 1];
    for s in 0..subsets {
        card_class[(s as u64).count_ones() as usize][s / 64] |= 1 << (s % 64);
    }

    let expected = expected_hvector(d)?;
    let target_f = h_to_f(&expected).expect("small integers");
    let target_counts: Vec<u32> =
        target_f.entries().iter().map(|&c| u32::try_from(c).expect("positive")).collect();

    let k = d as usize;
    let combos = k_subsets_flat(facet_masks.len(), k);
    let candidates_enumerated = (combos.len() / k) as u64;

    // 0 = does not cover, 1 = covers but wrong h-vector, 2 = match.
    let codes: Vec<u8> = combos
        .par_chunks_exact(k)
        .map(|combo| {
            let mut union = 0u64;
            for &i in combo {
                union |= facet_masks[i as usize];
            }
            if union != full {
                return 0;
            }
            let mut bm = vec![0u64; words];
            for &i in combo {
                for (w, b) in bm.iter_mut().zip(&facet_subsets[i as usize]) {
                    *w |= b;
                }
            }
            for (c, &want) in target_counts.iter().enumerate() {
                let got: u32 =
                    bm.iter().zip(&card_class[c]).map(|(w, m)| (w & m).count_ones()).sum();
                if got != want {
                    return 1;
                }
            }
            2
        })
        .collect();

    let skipped_uncovered = codes.iter().filter(|&&c| c == 0).count() as u64;

    let mut matches = Vec::new();
    for (ci, _) in codes.iter().enumerate().filter(|(_, &c)| c == 2) {
        let faces: Vec<Face> = combos[ci * k..(ci + 1) * k]
            .iter()
            .map(|&i| Face::from_mask(facet_masks[i as usize]))
            .collect();
        let cx = SimplicialComplex::from_faces(n, faces).expect("covering, equal cardinality");
        assert_eq!(cx.h_vector(), expected, "face-count filter must agree with the h-vector");
        let verdict = is_serre(&cx, 2, field);
        let rationals_verdict = is_serre(&cx, 2, FieldSpec::Rationals);
        matches.push(SearchMatch { facets: cx.facets().to_vec(), verdict, rationals_verdict });
    }

    let s2_satisfiers = matches.iter().filter(|m| m.verdict.satisfied).count() as u64;
    let rationals_recheck_agrees =
        matches.iter().all(|m| m.rationals_verdict.satisfied == m.verdict.satisfied);
    let family_facets = build_family(d)?.facets().to_vec();
    let family_found = matches.iter().any(|m| m.facets == family_facets);

    let s2_satisfiers_all_candidates = if check_all {
        let count: u64 = combos
            .par_chunks_exact(k)
            .map(|combo| {
                let mut union = 0u64;
                for &i in combo {
                    union |= facet_masks[i as usize];
                }
                if union != full {
                    return 0u64;
                }
                let faces: Vec<Face> =
                    combo.iter().map(|&i| Face::from_mask(facet_masks[i as usize])).collect();
                let cx = SimplicialComplex::from_faces(n, faces).expect("covering");
                is_serre(&cx, 2, field).satisfied as u64
            })
            .sum();
        Some(count)
    } else {
        None
    };

    Ok(SearchReport {
        d,
        field,
        target: expected,
        candidates_enumerated,
        skipped_uncovered,
        matches,
        s2_satisfiers,
        family_found,
        rationals_recheck_agrees,
        s2_satisfiers_all_candidates,
    })
}

/// All k-subsets of 0..n in lexicographic order, flattened.
fn k_subsets_flat(n: usize, k: usize) -> Vec<u8> {
    assert!(n <= u8::MAX as usize && k <= n);
    let mut out = Vec::new();
    let mut idx: Vec<u8> = (0..k as u8).collect();
    loop {
        out.extend_from_slice(&idx);
        let mut i = k;
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            if (idx[i] as usize) < i + n - k {
                break;
            }
        }
        idx[i] += 1;
        for j in i + 1..k {
            idx[j] = idx[j - 1] + 1;
        }
    }
}
