//! Finite simplicial complexes on the vertex set `[n]`.
//!
//! Faces are bitmasks over `[n]` (vertex `v` at bit `v - 1`). Two degenerate
//! complexes are kept apart: the *void* complex has no faces at all, while the
//! *irrelevant* complex `{∅}` has exactly the empty face. Reduced homology
//! distinguishes them: `h̃_{-1}({∅}) = 1`, and the void complex has no
//! homology at all.

use std::collections::HashSet;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::bits::{self, full_mask, popcount};
use crate::error::{Error, Result};

/// Largest supported vertex count (faces are `u64` masks).
pub const MAX_VERTICES: usize = 63;

/// Default guard for operations that enumerate all subsets of `[n]`.
pub const SUBSET_GUARD: usize = 20;

/// A square-free multidegree `b ∈ {0,1}^n`, identified with its support.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SquareFreeDegree {
    mask: u64,
    n: usize,
}

impl SquareFreeDegree {
    pub fn new(n: usize, mask: u64) -> Result<Self> {
        check_n(n)?;
        if mask & !full_mask(n) != 0 {
            let bad = bits::to_vertices(mask & !full_mask(n))[0];
            return Err(Error::VertexOutOfRange { vertex: bad, n });
        }
        Ok(SquareFreeDegree { mask, n })
    }

    pub fn from_vertices(n: usize, vertices: &[usize]) -> Result<Self> {
        check_n(n)?;
        for &v in vertices {
            if v == 0 || v > n {
                return Err(Error::VertexOutOfRange { vertex: v, n });
            }
        }
        Ok(SquareFreeDegree { mask: bits::from_vertices(vertices), n })
    }

    pub fn full(n: usize) -> Self {
        SquareFreeDegree { mask: full_mask(n), n }
    }

    pub fn mask(&self) -> u64 {
        self.mask
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Total degree `|b|`.
    pub fn total_degree(&self) -> usize {
        popcount(self.mask)
    }

    /// `Supp(b)` as 1-based vertex ids.
    pub fn support(&self) -> Vec<usize> {
        bits::to_vertices(self.mask)
    }
}

impl fmt::Display for SquareFreeDegree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{}}}", join_vertices(self.mask))
    }
}

fn check_n(n: usize) -> Result<()> {
    if n == 0 || n > MAX_VERTICES {
        Err(Error::InvalidVertexCount(n))
    } else {
        Ok(())
    }
}

pub(crate) fn join_vertices(mask: u64) -> String {
    bits::to_vertices(mask).iter().map(|v| v.to_string()).collect::<Vec<_>>().join(",")
}

/// A downward-closed family of subsets of `[n]`.
#[derive(Clone, Debug)]
pub struct SimplicialComplex {
    n: usize,
    /// Vertex set the complex is considered on (all of `[n]` unless restricted).
    vertex_set: u64,
    facets: Vec<u64>,
    /// `faces_by_size[k]` holds the faces with `k` vertices, lex-sorted.
    faces_by_size: Vec<Vec<u64>>,
    face_set: HashSet<u64>,
}

impl PartialEq for SimplicialComplex {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.vertex_set == other.vertex_set && self.faces_by_size == other.faces_by_size
    }
}

impl Eq for SimplicialComplex {}

impl SimplicialComplex {
    /// Builds the complex generated by `facets` (1-based vertex lists).
    pub fn from_facets(n: usize, facets: &[Vec<usize>]) -> Result<Self> {
        check_n(n)?;
        let mut masks = Vec::with_capacity(facets.len());
        for facet in facets {
            for &v in facet {
                if v == 0 || v > n {
                    return Err(Error::VertexOutOfRange { vertex: v, n });
                }
            }
            masks.push(bits::from_vertices(facet));
        }
        Ok(Self::from_facet_masks(n, full_mask(n), &masks))
    }

    /// Builds the downward closure of `generators` inside `vertex_set`.
    pub(crate) fn from_facet_masks(n: usize, vertex_set: u64, generators: &[u64]) -> Self {
        let mut face_set: HashSet<u64> = HashSet::new();
        for &g in generators {
            if face_set.contains(&g) {
                continue;
            }
            for sub in bits::submasks(g) {
                face_set.insert(sub);
            }
        }
        Self::from_face_set(n, vertex_set, face_set)
    }

    /// `faces` must already be downward closed.
    pub(crate) fn from_face_set(n: usize, vertex_set: u64, face_set: HashSet<u64>) -> Self {
        let max_size = face_set.iter().map(|&f| popcount(f)).max();
        let mut faces_by_size: Vec<Vec<u64>> = match max_size {
            Some(m) => vec![Vec::new(); m + 1],
            None => Vec::new(),
        };
        for &f in &face_set {
            faces_by_size[popcount(f)].push(f);
        }
        for layer in &mut faces_by_size {
            layer.sort_by(|a, b| bits::lex_cmp(*a, *b));
        }
        let mut facets: Vec<u64> = face_set
            .iter()
            .copied()
            .filter(|&f| {
                let free = vertex_set & !f;
                bits::bit_positions(free).all(|b| !face_set.contains(&(f | (1u64 << b))))
            })
            .collect();
        facets.sort_by(|a, b| popcount(*b).cmp(&popcount(*a)).then(bits::lex_cmp(*a, *b)));
        SimplicialComplex { n, vertex_set, facets, faces_by_size, face_set }
    }

    /// The complex with no faces.
    pub fn void(n: usize) -> Result<Self> {
        check_n(n)?;
        Ok(Self::from_face_set(n, full_mask(n), HashSet::new()))
    }

    /// The complex `{∅}`.
    pub fn irrelevant(n: usize) -> Result<Self> {
        check_n(n)?;
        Ok(Self::from_facet_masks(n, full_mask(n), &[0]))
    }

    /// The full simplex `2^[n]`.
    pub fn simplex(n: usize) -> Result<Self> {
        check_n(n)?;
        Ok(Self::from_facet_masks(n, full_mask(n), &[full_mask(n)]))
    }

    /// Boundary of the simplex on `[n]`.
    pub fn simplex_boundary(n: usize) -> Result<Self> {
        check_n(n)?;
        let full = full_mask(n);
        let gens: Vec<u64> = (0..n).map(|b| full & !(1u64 << b)).collect();
        Ok(Self::from_facet_masks(n, full, &gens))
    }

    /// The cycle graph `1-2-…-n-1` (n ≥ 3).
    pub fn cycle(n: usize) -> Result<Self> {
        if n < 3 {
            return Err(Error::Precondition(format!("cycle needs n >= 3, got {n}")));
        }
        let edges: Vec<Vec<usize>> = (1..=n).map(|v| vec![v, v % n + 1]).collect();
        Self::from_facets(n, &edges)
    }

    /// The path graph `1-2-…-n`.
    pub fn path(n: usize) -> Result<Self> {
        check_n(n)?;
        if n == 1 {
            return Self::from_facets(1, &[vec![1]]);
        }
        let edges: Vec<Vec<usize>> = (1..n).map(|v| vec![v, v + 1]).collect();
        Self::from_facets(n, &edges)
    }

    /// The complete graph `K_n` (1-skeleton of the simplex).
    pub fn complete_graph(n: usize) -> Result<Self> {
        check_n(n)?;
        let mut gens = bits::subsets_of_size(n, 2);
        if n == 1 {
            gens.push(1);
        }
        Ok(Self::from_facet_masks(n, full_mask(n), &gens))
    }

    /// The graph with vertex set `[n]` and the given edges; isolated vertices are kept.
    pub fn graph(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut facets: Vec<Vec<usize>> = (1..=n).map(|v| vec![v]).collect();
        facets.extend(edges.iter().map(|&(a, b)| vec![a, b]));
        Self::from_facets(n, &facets)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn vertex_set(&self) -> u64 {
        self.vertex_set
    }

    /// Inclusion-maximal faces, largest first.
    pub fn facet_masks(&self) -> &[u64] {
        &self.facets
    }

    pub fn facets(&self) -> Vec<Vec<usize>> {
        self.facets.iter().map(|&f| bits::to_vertices(f)).collect()
    }

    pub fn is_void(&self) -> bool {
        self.face_set.is_empty()
    }

    pub fn is_irrelevant(&self) -> bool {
        self.face_set.len() == 1
    }

    /// Dimension; `None` for the void complex, `Some(-1)` for `{∅}`.
    pub fn dimension(&self) -> Option<isize> {
        if self.faces_by_size.is_empty() {
            None
        } else {
            Some(self.faces_by_size.len() as isize - 2)
        }
    }

    pub fn contains(&self, face: u64) -> bool {
        self.face_set.contains(&face)
    }

    pub fn contains_vertices(&self, face: &[usize]) -> bool {
        face.iter().all(|&v| v >= 1 && v <= self.n) && self.contains(bits::from_vertices(face))
    }

    /// Faces with exactly `size` vertices (dimension `size - 1`), lex-sorted.
    pub fn faces_of_size(&self, size: usize) -> &[u64] {
        self.faces_by_size.get(size).map(|v| v.as_slice()).unwrap_or(&[])
    }

    /// Faces of dimension `dim` (`dim = -1` is the empty face).
    pub fn faces_of_dim(&self, dim: isize) -> &[u64] {
        if dim < -1 {
            &[]
        } else {
            self.faces_of_size((dim + 1) as usize)
        }
    }

    /// Number of faces of each size, indexed by size.
    pub fn f_vector(&self) -> Vec<usize> {
        self.faces_by_size.iter().map(|v| v.len()).collect()
    }

    pub fn num_faces(&self) -> usize {
        self.face_set.len()
    }

    pub fn all_faces(&self) -> impl Iterator<Item = u64> + '_ {
        self.faces_by_size.iter().flat_map(|v| v.iter().copied())
    }

    /// Checks downward closure, range and facet consistency.
    pub fn validate(&self) -> Result<()> {
        let full = full_mask(self.n);
        for &f in &self.face_set {
            if f & !full != 0 || f & !self.vertex_set != 0 {
                return Err(Error::Internal(format!("face {{{}}} outside vertex set", join_vertices(f))));
            }
            for b in bits::bit_positions(f) {
                if !self.face_set.contains(&(f & !(1u64 << b))) {
                    return Err(Error::Internal(format!("face {{{}}} is not downward closed", join_vertices(f))));
                }
            }
        }
        let regenerated = Self::from_facet_masks(self.n, self.vertex_set, &self.facets);
        if regenerated.face_set != self.face_set {
            return Err(Error::Internal("facets do not regenerate the face list".into()));
        }
        Ok(())
    }

    /// `Δ_b = {τ ∈ Δ : τ ⊆ Supp(b)}`, keeping the ambient `n`.
    pub fn restriction(&self, b: SquareFreeDegree) -> SimplicialComplex {
        self.restrict_mask(b.mask())
    }

    pub(crate) fn restrict_mask(&self, mask: u64) -> SimplicialComplex {
        let faces: HashSet<u64> = self.face_set.iter().copied().filter(|&f| f & !mask == 0).collect();
        Self::from_face_set(self.n, self.vertex_set & mask, faces)
    }

    /// `lk_{Δ_{V'}}(σ) = {τ ∈ Δ_{V'} : τ ∩ σ = ∅, τ ∪ σ ∈ Δ}` on vertex set `V'`.
    pub fn link(&self, restrict_to: SquareFreeDegree, sigma: &[usize]) -> Result<SimplicialComplex> {
        let sigma_mask = bits::from_vertices(sigma);
        if sigma.iter().any(|&v| v == 0 || v > self.n) || !self.contains(sigma_mask) {
            return Err(Error::NotAFace(sigma.to_vec()));
        }
        Ok(self.link_mask(restrict_to.mask(), sigma_mask))
    }

    pub(crate) fn link_mask(&self, restrict_to: u64, sigma: u64) -> SimplicialComplex {
        let faces: HashSet<u64> = self
            .face_set
            .iter()
            .copied()
            .filter(|&t| t & !restrict_to == 0 && t & sigma == 0 && self.face_set.contains(&(t | sigma)))
            .collect();
        Self::from_face_set(self.n, self.vertex_set & restrict_to, faces)
    }

    /// `d = dim Δ` when the `(d-1)`-skeleton of `Δ` is that of the full simplex on `[n]`.
    pub fn skeleton_complete_degree(&self) -> Result<Option<usize>> {
        let dim = self.dimension().ok_or(Error::VoidComplex)?;
        if dim < 0 {
            return Ok(None);
        }
        let d = dim as usize;
        let full = (0..=d).all(|size| self.faces_of_size(size).len() == binomial(self.n, size));
        Ok(if full { Some(d) } else { None })
    }

    /// All `(dim + 1)`-subsets of `[n]` that are not faces, lex-sorted.
    pub fn missing_faces(&self, dim: usize) -> Vec<u64> {
        let mut out: Vec<u64> = bits::subsets_of_size(self.n, dim + 1)
            .into_iter()
            .filter(|s| !self.contains(*s))
            .collect();
        out.sort_by(|a, b| bits::lex_cmp(*a, *b));
        out
    }

    /// The largest complex with the same `d`-skeleton, `d` from [`Self::skeleton_complete_degree`].
    pub fn flag_completion(&self) -> Result<SimplicialComplex> {
        let d = self.skeleton_complete_degree()?.ok_or_else(|| {
            Error::Precondition("flag completion needs a complete codimension-one skeleton".into())
        })?;
        if self.n > SUBSET_GUARD {
            return Err(Error::GuardExceeded { n: self.n, limit: SUBSET_GUARD });
        }
        let mut faces: HashSet<u64> = self.all_faces().filter(|&f| popcount(f) <= d + 1).collect();
        for size in d + 2..=self.n {
            let layer: Vec<u64> = bits::subsets_of_size(self.n, size)
                .into_iter()
                .filter(|&s| bits::bit_positions(s).all(|b| faces.contains(&(s & !(1u64 << b)))))
                .collect();
            if layer.is_empty() {
                break;
            }
            faces.extend(layer);
        }
        Ok(Self::from_face_set(self.n, self.vertex_set, faces))
    }

    /// Faces of the complex as sorted 1-based vertex lists, grouped by dimension.
    pub fn faces_as_vertices(&self) -> Vec<Vec<Vec<usize>>> {
        self.faces_by_size.iter().map(|layer| layer.iter().map(|&f| bits::to_vertices(f)).collect()).collect()
    }

    pub fn to_json_value(&self) -> ComplexFile {
        ComplexFile { n: self.n, facets: self.facets() }
    }

    /// Text format: `n <N>` followed by one facet per line.
    pub fn to_text(&self) -> String {
        let mut out = format!("n {}\n", self.n);
        for f in self.facets() {
            if f.is_empty() {
                out.push_str("{}");
            } else {
                out.push_str(&f.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(" "));
            }
            out.push('\n');
        }
        out
    }

    /// Parses either the text format or the JSON format (detected by a leading `{`).
    pub fn parse(input: &str) -> Result<Self> {
        if input.trim_start().starts_with('{') {
            let file: ComplexFile = serde_json::from_str(input)?;
            return Self::from_facets(file.n, &file.facets);
        }
        let mut n: Option<usize> = None;
        let mut facets: Vec<Vec<usize>> = Vec::new();
        for (idx, raw) in input.lines().enumerate() {
            let line = raw.trim();
            if line.starts_with('#') {
                continue;
            }
            let lineno = idx + 1;
            match n {
                None => {
                    if line.is_empty() {
                        continue;
                    }
                    let rest = line.strip_prefix('n').ok_or_else(|| Error::Parse {
                        line: lineno,
                        message: "expected `n <N>` header".into(),
                    })?;
                    let value = rest.trim().parse::<usize>().map_err(|e| Error::Parse {
                        line: lineno,
                        message: format!("bad vertex count: {e}"),
                    })?;
                    n = Some(value);
                }
                Some(_) => {
                    if line.is_empty() {
                        continue;
                    }
                    // `{}` spells the empty face
                    if line == "{}" {
                        facets.push(Vec::new());
                        continue;
                    }
                    let facet = line
                        .split_whitespace()
                        .map(|tok| {
                            tok.parse::<usize>().map_err(|e| Error::Parse {
                                line: lineno,
                                message: format!("bad vertex `{tok}`: {e}"),
                            })
                        })
                        .collect::<Result<Vec<_>>>()?;
                    facets.push(facet);
                }
            }
        }
        let n = n.ok_or(Error::Parse { line: 0, message: "missing `n <N>` header".into() })?;
        Self::from_facets(n, &facets)
    }
}

impl FromStr for SimplicialComplex {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Self::parse(s)
    }
}

impl fmt::Display for SimplicialComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_void() {
            return write!(f, "void complex on [{}]", self.n);
        }
        let facets: Vec<String> = self.facets.iter().map(|&m| format!("{{{}}}", join_vertices(m))).collect();
        write!(f, "complex on [{}] with facets {}", self.n, facets.join(" "))
    }
}

/// JSON form of a complex: `{"n": N, "facets": [[...], ...]}`.
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct ComplexFile {
    pub n: usize,
    pub facets: Vec<Vec<usize>>,
}

pub(crate) fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
    }
    acc as usize
}

#[cfg(test)]
mod tests {
    use super::*;

    fn two_edges() -> SimplicialComplex {
        SimplicialComplex::from_facets(4, &[vec![1, 2], vec![3, 4]]).unwrap()
    }

    fn tetra_minus_face() -> SimplicialComplex {
        SimplicialComplex::from_facets(4, &[vec![1, 2, 4], vec![1, 3, 4], vec![2, 3, 4]]).unwrap()
    }

    fn deg(n: usize, v: &[usize]) -> SquareFreeDegree {
        SquareFreeDegree::from_vertices(n, v).unwrap()
    }

    #[test]
    fn two_edges_faces() {
        let d = two_edges();
        let faces = d.faces_as_vertices();
        assert_eq!(faces[0], vec![Vec::<usize>::new()]);
        assert_eq!(faces[1], vec![vec![1], vec![2], vec![3], vec![4]]);
        assert_eq!(faces[2], vec![vec![1, 2], vec![3, 4]]);
        assert_eq!(d.num_faces(), 7);
        d.validate().unwrap();
    }

    #[test]
    fn void_irrelevant_and_dedup() {
        let v = SimplicialComplex::from_facets(3, &[]).unwrap();
        assert!(v.is_void());
        assert_eq!(v.dimension(), None);
        let irr = SimplicialComplex::from_facets(3, &[vec![]]).unwrap();
        assert!(irr.is_irrelevant());
        assert_eq!(irr.dimension(), Some(-1));
        assert_ne!(v, irr);
        let a = SimplicialComplex::from_facets(4, &[vec![1, 2], vec![1, 2]]).unwrap();
        let b = SimplicialComplex::from_facets(4, &[vec![1, 2]]).unwrap();
        assert_eq!(a, b);
        assert_eq!(a.facets(), vec![vec![1, 2]]);
    }

    #[test]
    fn construction_errors() {
        assert!(matches!(
            SimplicialComplex::from_facets(3, &[vec![1, 4]]),
            Err(Error::VertexOutOfRange { vertex: 4, n: 3 })
        ));
        assert!(matches!(SimplicialComplex::from_facets(0, &[]), Err(Error::InvalidVertexCount(0))));
        assert!(matches!(SimplicialComplex::from_facets(3, &[vec![0]]), Err(Error::VertexOutOfRange { .. })));
    }

    #[test]
    fn facets_are_maximal() {
        let d = SimplicialComplex::from_facets(4, &[vec![1, 2, 3], vec![1, 2], vec![4]]).unwrap();
        assert_eq!(d.facets(), vec![vec![1, 2, 3], vec![4]]);
    }

    #[test]
    fn restriction_examples() {
        let c4 = SimplicialComplex::cycle(4).unwrap();
        let r = c4.restriction(deg(4, &[1, 3]));
        assert_eq!(r.faces_as_vertices()[1], vec![vec![1], vec![3]]);
        assert_eq!(r.faces_of_size(2).len(), 0);
        assert_eq!(c4.restriction(SquareFreeDegree::full(4)), c4);

        let t = tetra_minus_face();
        let tri = t.restriction(deg(4, &[1, 2, 3]));
        assert_eq!(tri.faces_as_vertices()[2], vec![vec![1, 2], vec![1, 3], vec![2, 3]]);
        assert_eq!(tri.dimension(), Some(1));
    }

    #[test]
    fn link_examples() {
        let d = two_edges();
        let l = d.link(deg(4, &[1, 2]), &[3, 4]).unwrap();
        assert!(l.is_irrelevant());
        let l = d.link(deg(4, &[1, 2]), &[3]).unwrap();
        assert!(l.is_irrelevant());
        let l = d.link(deg(4, &[1, 2]), &[]).unwrap();
        assert_eq!(l, d.restriction(deg(4, &[1, 2])));
        assert!(matches!(d.link(deg(4, &[1]), &[1, 3]), Err(Error::NotAFace(_))));
    }

    #[test]
    fn skeleton_degree_examples() {
        let path = SimplicialComplex::path(4).unwrap();
        assert_eq!(path.skeleton_complete_degree().unwrap(), Some(1));
        assert_eq!(tetra_minus_face().skeleton_complete_degree().unwrap(), Some(2));
        assert_eq!(two_edges().skeleton_complete_degree().unwrap(), Some(1));
        // vertex 3 missing: the 0-skeleton is not full
        let partial = SimplicialComplex::from_facets(3, &[vec![1, 2]]).unwrap();
        assert_eq!(partial.skeleton_complete_degree().unwrap(), None);
        assert!(matches!(SimplicialComplex::void(3).unwrap().skeleton_complete_degree(), Err(Error::VoidComplex)));
    }

    #[test]
    fn missing_faces_and_flag_completion() {
        let path = SimplicialComplex::path(4).unwrap();
        let missing: Vec<Vec<usize>> = path.missing_faces(1).into_iter().map(bits::to_vertices).collect();
        assert_eq!(missing, vec![vec![1, 3], vec![1, 4], vec![2, 4]]);
        assert_eq!(path.flag_completion().unwrap(), path);
        let simplex = SimplicialComplex::simplex(4).unwrap();
        for dim in 0..4 {
            assert!(simplex.missing_faces(dim).is_empty());
        }
        let k4 = SimplicialComplex::complete_graph(4).unwrap();
        assert_eq!(k4.flag_completion().unwrap(), simplex);
        let partial = SimplicialComplex::from_facets(3, &[vec![1, 2]]).unwrap();
        assert!(matches!(partial.flag_completion(), Err(Error::Precondition(_))));
    }

    #[test]
    fn text_and_json_formats() {
        let text = "# two edges\nn 4\n1 2\n3 4\n";
        let d: SimplicialComplex = text.parse().unwrap();
        assert_eq!(d, two_edges());
        let json = r#"{"n": 4, "facets": [[1,2],[3,4]]}"#;
        assert_eq!(SimplicialComplex::parse(json).unwrap(), d);
        assert_eq!(SimplicialComplex::parse(&d.to_text()).unwrap(), d);
        let void = SimplicialComplex::parse("n 3\n").unwrap();
        assert!(void.is_void());
        assert!(matches!(SimplicialComplex::parse("1 2\n"), Err(Error::Parse { .. })));
        assert!(matches!(SimplicialComplex::parse("n 3\n1 x\n"), Err(Error::Parse { line: 2, .. })));
    }
}
