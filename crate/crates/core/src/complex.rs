//! Simplicial complexes on vertex sets {1, ..., n}, n <= 64, given by their
//! facets. Faces are bitmasks, so subset tests, links and face enumeration
//! are single-word operations.

use std::cmp::Ordering;
use std::fmt;

use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::arith::binomial_i128;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ComplexError {
    #[error("facet list is empty")]
    EmptyInput,
    #[error("facets must be nonempty vertex sets")]
    EmptyFacet,
    #[error("vertex count {0} outside supported range 1..=64")]
    InvalidVertexCount(u32),
    #[error("vertex {v} outside 1..={n}")]
    VertexOutOfRange { v: u32, n: u32 },
    #[error("vertex {0} is not covered by any facet")]
    UncoveredVertex(u32),
    #[error("cardinality {k} out of range 0..={d}")]
    CardOutOfRange { k: u32, d: u32 },
    #[error("{0} is not a face of the complex")]
    FaceNotInComplex(Face),
    #[error("{0}")]
    InvalidVector(&'static str),
    #[error("integer overflow in exact arithmetic")]
    Overflow,
}

/// A subset of {1, ..., 64} stored as a bitmask (bit v-1 set iff vertex v is
/// present). Ordered lexicographically as a sorted tuple of vertices, so
/// {1,4} < {2,3} and a proper prefix sorts before its extensions.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Face(u64);

impl Face {
    pub const EMPTY: Face = Face(0);

    /// Builds a face from vertex labels in 1..=64. Duplicates collapse.
    pub fn from_vertices<I: IntoIterator<Item = u32>>(vs: I) -> Result<Face, ComplexError> {
        let mut mask = 0u64;
        for v in vs {
            if v == 0 || v > 64 {
                return Err(ComplexError::VertexOutOfRange { v, n: 64 });
            }
            mask |= 1 << (v - 1);
        }
        Ok(Face(mask))
    }

    pub const fn from_mask(mask: u64) -> Face {
        Face(mask)
    }

    pub const fn mask(self) -> u64 {
        self.0
    }

    pub const fn card(self) -> u32 {
        self.0.count_ones()
    }

    pub const fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub const fn contains(self, v: u32) -> bool {
        v >= 1 && v <= 64 && self.0 >> (v - 1) & 1 == 1
    }

    pub const fn is_subset_of(self, other: Face) -> bool {
        self.0 & !other.0 == 0
    }

    pub const fn union(self, other: Face) -> Face {
        Face(self.0 | other.0)
    }

    pub const fn intersection(self, other: Face) -> Face {
        Face(self.0 & other.0)
    }

    pub const fn difference(self, other: Face) -> Face {
        Face(self.0 & !other.0)
    }

    pub fn insert(self, v: u32) -> Face {
        debug_assert!((1..=64).contains(&v));
        Face(self.0 | 1 << (v - 1))
    }

    pub fn remove(self, v: u32) -> Face {
        debug_assert!((1..=64).contains(&v));
        Face(self.0 & !(1 << (v - 1)))
    }

    /// Vertices in increasing order.
    pub fn iter(self) -> impl Iterator<Item = u32> {
        let mut rest = self.0;
        std::iter::from_fn(move || {
            if rest == 0 {
                None
            } else {
                let v = rest.trailing_zeros() + 1;
                rest &= rest - 1;
                Some(v)
            }
        })
    }

    pub fn vertices(self) -> Vec<u32> {
        self.iter().collect()
    }

    /// Position of vertex `v` within the sorted vertex tuple (0-based).
    pub fn position_of(self, v: u32) -> u32 {
        debug_assert!(self.contains(v));
        (self.0 & ((1 << (v - 1)) - 1)).count_ones()
    }
}

impl Ord for Face {
    fn cmp(&self, other: &Self) -> Ordering {
        if self.0 == other.0 {
            return Ordering::Equal;
        }
        // Compare at the lowest differing vertex; a face with no vertices
        // past that point is a proper prefix of the other and sorts first.
        let v = (self.0 ^ other.0).trailing_zeros();
        if self.0 >> v & 1 == 1 {
            if (other.0 >> v) >> 1 == 0 {
                Ordering::Greater
            } else {
                Ordering::Less
            }
        } else if (self.0 >> v) >> 1 == 0 {
            Ordering::Less
        } else {
            Ordering::Greater
        }
    }
}

impl PartialOrd for Face {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Face {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, v) in self.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "}}")
    }
}

impl fmt::Debug for Face {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl Serialize for Face {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_seq(self.iter())
    }
}

/// Face counts by cardinality: entry j is the number of faces with j
/// vertices, so entry 0 is always 1 (the empty face) and the last entry
/// counts the top-cardinality faces.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FVector(Vec<i64>);

impl FVector {
    pub fn new(entries: Vec<i64>) -> Result<Self, ComplexError> {
        if entries.is_empty() {
            return Err(ComplexError::InvalidVector("f-vector must be nonempty"));
        }
        if entries[0] != 1 {
            return Err(ComplexError::InvalidVector("f-vector must start with 1"));
        }
        Ok(FVector(entries))
    }

    pub fn entries(&self) -> &[i64] {
        &self.0
    }

    /// Length minus one: the maximum face cardinality, i.e. dim + 1.
    pub fn d(&self) -> u32 {
        (self.0.len() - 1) as u32
    }

    /// Number of faces of the given dimension (0 outside the stored range).
    pub fn f(&self, dim: i32) -> i64 {
        usize::try_from(dim + 1).ok().and_then(|i| self.0.get(i)).copied().unwrap_or(0)
    }
}

impl fmt::Display for FVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_tuple(f, &self.0)
    }
}

/// An h-vector (h_0, ..., h_d); entry 0 is always 1.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct HVector(Vec<i64>);

impl HVector {
    pub fn new(entries: Vec<i64>) -> Result<Self, ComplexError> {
        if entries.is_empty() {
            return Err(ComplexError::InvalidVector("h-vector must be nonempty"));
        }
        if entries[0] != 1 {
            return Err(ComplexError::InvalidVector("h-vector must start with 1"));
        }
        Ok(HVector(entries))
    }

    pub fn entries(&self) -> &[i64] {
        &self.0
    }

    pub fn d(&self) -> u32 {
        (self.0.len() - 1) as u32
    }

    pub fn h(&self, i: u32) -> i64 {
        self.0.get(i as usize).copied().unwrap_or(0)
    }
}

impl fmt::Display for HVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_tuple(f, &self.0)
    }
}

fn write_tuple(f: &mut fmt::Formatter<'_>, entries: &[i64]) -> fmt::Result {
    write!(f, "(")?;
    for (i, e) in entries.iter().enumerate() {
        if i > 0 {
            write!(f, ", ")?;
        }
        write!(f, "{e}")?;
    }
    write!(f, ")")
}

/// h from f: h_k = sum_{i<=k} (-1)^(k-i) C(d-i, k-i) f_{i-1}.
pub fn f_to_h(fv: &FVector) -> Result<HVector, ComplexError> {
    let d = fv.d() as u64;
    let f = fv.entries();
    let mut h = Vec::with_capacity(f.len());
    for k in 0..=d {
        let mut acc: i128 = 0;
        for i in 0..=k {
            let c = binomial_i128(d - i, k - i).ok_or(ComplexError::Overflow)?;
            let term = c.checked_mul(f[i as usize] as i128).ok_or(ComplexError::Overflow)?;
            acc = if (k - i) % 2 == 0 { acc.checked_add(term) } else { acc.checked_sub(term) }
                .ok_or(ComplexError::Overflow)?;
        }
        h.push(i64::try_from(acc).map_err(|_| ComplexError::Overflow)?);
    }
    Ok(HVector(h))
}

/// f from h: f_{k-1} = sum_{i<=k} C(d-i, k-i) h_i. Exact inverse of `f_to_h`.
pub fn h_to_f(hv: &HVector) -> Result<FVector, ComplexError> {
    let d = hv.d() as u64;
    let h = hv.entries();
    let mut f = Vec::with_capacity(h.len());
    for k in 0..=d {
        let mut acc: i128 = 0;
        for i in 0..=k {
            let c = binomial_i128(d - i, k - i).ok_or(ComplexError::Overflow)?;
            let term = c.checked_mul(h[i as usize] as i128).ok_or(ComplexError::Overflow)?;
            acc = acc.checked_add(term).ok_or(ComplexError::Overflow)?;
        }
        f.push(i64::try_from(acc).map_err(|_| ComplexError::Overflow)?);
    }
    Ok(FVector(f))
}

/// A simplicial complex on {1, ..., n}, stored as its inclusion-maximal
/// faces in lexicographic order. The complex whose only face is the empty
/// set (which arises as the link of a facet) is stored with no facets.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SimplicialComplex {
    n: u32,
    facets: Vec<Face>,
}

impl SimplicialComplex {
    /// Builds a complex from facet vertex lists. Non-maximal and duplicate
    /// entries are absorbed. Every vertex of {1, ..., n} must appear.
    pub fn from_facets<I>(n: u32, facets: I) -> Result<Self, ComplexError>
    where
        I: IntoIterator,
        I::Item: AsRef<[u32]>,
    {
        if n == 0 || n > 64 {
            return Err(ComplexError::InvalidVertexCount(n));
        }
        let mut masks = Vec::new();
        for facet in facets {
            let mut mask = 0u64;
            for &v in facet.as_ref() {
                if v == 0 || v > n {
                    return Err(ComplexError::VertexOutOfRange { v, n });
                }
                mask |= 1 << (v - 1);
            }
            masks.push(Face(mask));
        }
        Self::from_faces(n, masks)
    }

    /// Same as `from_facets`, but from prebuilt faces.
    pub fn from_faces(n: u32, facets: Vec<Face>) -> Result<Self, ComplexError> {
        if n == 0 || n > 64 {
            return Err(ComplexError::InvalidVertexCount(n));
        }
        if facets.is_empty() {
            return Err(ComplexError::EmptyInput);
        }
        let full = full_mask(n);
        let mut union = 0u64;
        for &f in &facets {
            if f.is_empty() {
                return Err(ComplexError::EmptyFacet);
            }
            if f.0 & !full != 0 {
                let v = (f.0 & !full).trailing_zeros() + 1;
                return Err(ComplexError::VertexOutOfRange { v, n });
            }
            union |= f.0;
        }
        if union != full {
            let v = (!union & full).trailing_zeros() + 1;
            return Err(ComplexError::UncoveredVertex(v));
        }
        let facets = maximalize(facets);
        Ok(SimplicialComplex { n, facets })
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    /// Inclusion-maximal faces, lexicographically sorted.
    pub fn facets(&self) -> &[Face] {
        &self.facets
    }

    /// True for the complex {∅}, whose only face is the empty set.
    pub fn is_empty_complex(&self) -> bool {
        self.facets.is_empty()
    }

    pub fn dim(&self) -> i32 {
        self.facets.iter().map(|f| f.card() as i32 - 1).max().unwrap_or(-1)
    }

    /// Maximum facet cardinality, i.e. dim + 1; the Krull dimension of the
    /// associated face ring.
    pub fn d(&self) -> u32 {
        (self.dim() + 1) as u32
    }

    /// Union of all facets.
    pub fn support(&self) -> Face {
        Face(self.facets.iter().fold(0, |acc, f| acc | f.0))
    }

    pub fn is_face(&self, face: Face) -> bool {
        face.is_empty() || self.facets.iter().any(|f| face.is_subset_of(*f))
    }

    /// All faces, sorted by cardinality then lexicographically.
    pub fn all_faces(&self) -> Vec<Face> {
        let mut masks = self.subset_masks();
        masks.sort_unstable();
        masks.dedup();
        let mut faces: Vec<Face> = masks.into_iter().map(Face).collect();
        faces.sort_unstable_by_key(|f| (f.card(), *f));
        faces
    }

    /// Faces of cardinality k in lexicographic order. k must be at most d.
    pub fn faces_of_card(&self, k: u32) -> Result<Vec<Face>, ComplexError> {
        let d = self.d();
        if k > d {
            return Err(ComplexError::CardOutOfRange { k, d });
        }
        if k == 0 {
            return Ok(vec![Face::EMPTY]);
        }
        let mut masks: Vec<u64> =
            self.subset_masks().into_iter().filter(|m| m.count_ones() == k).collect();
        masks.sort_unstable();
        masks.dedup();
        let mut faces: Vec<Face> = masks.into_iter().map(Face).collect();
        faces.sort_unstable();
        Ok(faces)
    }

    fn subset_masks(&self) -> Vec<u64> {
        let mut masks = Vec::new();
        for f in &self.facets {
            let m = f.0;
            let mut sub = m;
            loop {
                masks.push(sub);
                if sub == 0 {
                    break;
                }
                sub = (sub - 1) & m;
            }
        }
        if self.facets.is_empty() {
            masks.push(0);
        }
        masks
    }

    /// Face counts by cardinality, from the empty face up to the facets.
    pub fn f_vector(&self) -> FVector {
        let d = self.d() as usize;
        let mut counts = vec![0i64; d + 1];
        let mut masks = self.subset_masks();
        masks.sort_unstable();
        masks.dedup();
        for m in masks {
            counts[m.count_ones() as usize] += 1;
        }
        FVector(counts)
    }

    pub fn h_vector(&self) -> HVector {
        f_to_h(&self.f_vector())
            .expect("h-vector arithmetic cannot overflow for an enumerable complex")
    }

    /// Reduced Euler characteristic: -f_{-1} + f_0 - f_1 + ...
    pub fn reduced_euler_char(&self) -> i64 {
        let fv = self.f_vector();
        let mut acc = 0i64;
        for (j, &c) in fv.entries().iter().enumerate() {
            if j % 2 == 0 {
                acc -= c;
            } else {
                acc += c;
            }
        }
        acc
    }

    /// The link of `face`: all faces disjoint from it whose union with it is
    /// again a face. Vertex labels are preserved; the link of a facet is the
    /// complex {∅}.
    pub fn link(&self, face: Face) -> Result<SimplicialComplex, ComplexError> {
        if !self.is_face(face) {
            return Err(ComplexError::FaceNotInComplex(face));
        }
        let mut facets: Vec<Face> = self
            .facets
            .iter()
            .filter(|f| face.is_subset_of(**f))
            .map(|f| f.difference(face))
            .filter(|f| !f.is_empty())
            .collect();
        facets.sort_unstable();
        // Facets of a link inherit maximality from the facets of the complex.
        Ok(SimplicialComplex { n: self.n, facets })
    }

    /// Smallest vertex contained in every facet, if one exists.
    pub fn cone_apex(&self) -> Option<u32> {
        if self.facets.is_empty() {
            return None;
        }
        let common = self.facets.iter().fold(u64::MAX, |acc, f| acc & f.0);
        if common == 0 {
            None
        } else {
            Some(common.trailing_zeros() + 1)
        }
    }

    pub fn is_cone(&self) -> bool {
        self.cone_apex().is_some()
    }

    pub fn is_pure(&self) -> bool {
        match self.facets.split_first() {
            None => true,
            Some((first, rest)) => rest.iter().all(|f| f.card() == first.card()),
        }
    }

    /// Number of connected components of the support graph (two vertices are
    /// connected when some face contains both). Zero for {∅}.
    pub fn connected_components(&self) -> usize {
        let mut remaining = self.support().0;
        let mut count = 0;
        while remaining != 0 {
            count += 1;
            let mut comp = remaining & remaining.wrapping_neg();
            loop {
                let mut grew = false;
                for f in &self.facets {
                    if f.0 & comp != 0 && f.0 & !comp != 0 {
                        comp |= f.0;
                        grew = true;
                    }
                }
                if !grew {
                    break;
                }
            }
            remaining &= !comp;
        }
        count
    }

    /// Inclusion-minimal subsets of the support that are not faces, in
    /// lexicographic order. These generate the Stanley-Reisner ideal.
    pub fn minimal_nonfaces(&self) -> Vec<Face> {
        let mut masks = self.subset_masks();
        masks.sort_unstable();
        masks.dedup();
        let is_face = |m: u64| masks.binary_search(&m).is_ok();
        let support = self.support().0;
        let mut result: Vec<Face> = Vec::new();
        for &m in &masks {
            let mut outside = support & !m;
            while outside != 0 {
                let bit = outside & outside.wrapping_neg();
                outside &= !bit;
                let cand = m | bit;
                if is_face(cand) {
                    continue;
                }
                let mut all_subfaces = true;
                let mut rest = cand;
                while rest != 0 {
                    let b = rest & rest.wrapping_neg();
                    rest &= !b;
                    if !is_face(cand & !b) {
                        all_subfaces = false;
                        break;
                    }
                }
                if all_subfaces {
                    result.push(Face(cand));
                }
            }
        }
        result.sort_unstable();
        result.dedup();
        result
    }
}

impl Serialize for SimplicialComplex {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut s = serializer.serialize_struct("SimplicialComplex", 2)?;
        s.serialize_field("n", &self.n)?;
        s.serialize_field("facets", &self.facets)?;
        s.end()
    }
}

fn full_mask(n: u32) -> u64 {
    if n == 64 {
        u64::MAX
    } else {
        (1 << n) - 1
    }
}

fn maximalize(mut facets: Vec<Face>) -> Vec<Face> {
    facets.sort_unstable_by_key(|f| std::cmp::Reverse(f.card()));
    let mut kept: Vec<Face> = Vec::with_capacity(facets.len());
    for f in facets {
        if !kept.iter().any(|k| f.is_subset_of(*k)) {
            kept.push(f);
        }
    }
    kept.sort_unstable();
    kept
}
