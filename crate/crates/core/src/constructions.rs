//! Builders for the code families under study: codes from graphs and convex
//! polyhedra (all five Platonic solids), complete-graph codes, Simplex and
//! Hamming codes, projective line systems, and the parity-check transpose
//! transform.

use crate::bits::{BitMatrix, BitVector};
use crate::code::LinearCode;
use crate::{Error, Result};
use serde::{Deserialize, Serialize};
use std::collections::{BTreeSet, HashMap};
use std::fmt;

/// An undirected simple graph with 1-based vertices. The edge order is
/// significant: edge j is coordinate j of the associated code.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimpleGraph {
    vertex_count: usize,
    edges: Vec<(usize, usize)>,
}

impl SimpleGraph {
    pub fn new(vertex_count: usize, edges: Vec<(usize, usize)>) -> Result<SimpleGraph> {
        let mut seen = BTreeSet::new();
        for &(u, v) in &edges {
            if u == v {
                return Err(Error::InvalidGraph(format!("self-loop at vertex {u}")));
            }
            if u < 1 || u > vertex_count || v < 1 || v > vertex_count {
                return Err(Error::InvalidGraph(format!(
                    "edge ({u}, {v}) out of range 1..={vertex_count}"
                )));
            }
            if !seen.insert((u.min(v), u.max(v))) {
                return Err(Error::InvalidGraph(format!("duplicate edge ({u}, {v})")));
            }
        }
        Ok(SimpleGraph {
            vertex_count,
            edges,
        })
    }

    /// Complete graph K_q with edges in lexicographic order:
    /// (1,2), (1,3), ..., (1,q), (2,3), ...
    pub fn complete(q: usize) -> SimpleGraph {
        let mut edges = Vec::with_capacity(q * (q - 1) / 2);
        for u in 1..=q {
            for v in u + 1..=q {
                edges.push((u, v));
            }
        }
        SimpleGraph {
            vertex_count: q,
            edges,
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn degree(&self, vertex: usize) -> usize {
        self.edges
            .iter()
            .filter(|&&(u, v)| u == vertex || v == vertex)
            .count()
    }

    pub fn min_degree(&self) -> usize {
        (1..=self.vertex_count)
            .map(|v| self.degree(v))
            .min()
            .unwrap_or(0)
    }

    pub fn connected_components(&self) -> usize {
        let mut parent: Vec<usize> = (0..=self.vertex_count).collect();
        fn find(parent: &mut Vec<usize>, x: usize) -> usize {
            if parent[x] != x {
                let root = find(parent, parent[x]);
                parent[x] = root;
            }
            parent[x]
        }
        for &(u, v) in &self.edges {
            let (ru, rv) = (find(&mut parent, u), find(&mut parent, v));
            parent[ru] = rv;
        }
        (1..=self.vertex_count)
            .map(|v| find(&mut parent, v))
            .collect::<BTreeSet<_>>()
            .len()
    }

    /// Line-oriented edge list: one "u v" pair per line, 1-based, edge index
    /// = line number. Blank lines and `#` comments are skipped.
    pub fn parse_edge_list(input: &str) -> Result<SimpleGraph> {
        let mut edges = Vec::new();
        let mut max_vertex = 0;
        for (lineno, line) in input.lines().enumerate() {
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let mut it = line.split_whitespace();
            let parse = |tok: Option<&str>| -> Result<usize> {
                tok.ok_or_else(|| Error::Parse(format!("line {}: expected \"u v\"", lineno + 1)))?
                    .parse()
                    .map_err(|_| Error::Parse(format!("line {}: bad vertex", lineno + 1)))
            };
            let u = parse(it.next())?;
            let v = parse(it.next())?;
            if it.next().is_some() {
                return Err(Error::Parse(format!(
                    "line {}: trailing tokens",
                    lineno + 1
                )));
            }
            max_vertex = max_vertex.max(u).max(v);
            edges.push((u, v));
        }
        SimpleGraph::new(max_vertex, edges)
    }
}

/// v x e vertex-edge incidence matrix: column j has ones exactly at the two
/// endpoints of edge j.
pub fn incidence_matrix(graph: &SimpleGraph) -> BitMatrix {
    let mut m = BitMatrix::zeros(graph.vertex_count(), graph.edge_count());
    for (j, &(u, v)) in graph.edges().iter().enumerate() {
        m.set(u - 1, j, true);
        m.set(v - 1, j, true);
    }
    m
}

/// The cycle-space code of a graph: the kernel of its incidence matrix.
/// For a graph with c connected components, k = e - v + c.
pub fn graph_code(graph: &SimpleGraph) -> LinearCode {
    LinearCode::from_parity(&incidence_matrix(graph)).expect("graphs have at least one edge column")
}

/// A convex polyhedron given combinatorially: its edge graph plus the faces
/// as sets of bounding edges (1-based edge indices).
#[derive(Clone, Debug)]
pub struct Polyhedron {
    graph: SimpleGraph,
    faces: Vec<Vec<usize>>,
    name: Option<String>,
}

impl Polyhedron {
    pub fn new(
        graph: SimpleGraph,
        faces: Vec<Vec<usize>>,
        name: Option<String>,
    ) -> Result<Polyhedron> {
        let v = graph.vertex_count();
        let e = graph.edge_count();
        let f = faces.len();
        if (v + f) as i64 - e as i64 != 2 {
            return Err(Error::InvalidPolyhedron(format!(
                "Euler relation fails: v - e + f = {}",
                v as i64 - e as i64 + f as i64
            )));
        }
        let mut edge_face_count = vec![0usize; e + 1];
        for (fi, face) in faces.iter().enumerate() {
            let distinct: BTreeSet<_> = face.iter().copied().collect();
            if distinct.len() != face.len() {
                return Err(Error::InvalidPolyhedron(format!(
                    "face {} repeats an edge",
                    fi + 1
                )));
            }
            for &ei in face {
                if ei < 1 || ei > e {
                    return Err(Error::InvalidPolyhedron(format!(
                        "face {} uses edge {ei} out of range 1..={e}",
                        fi + 1
                    )));
                }
                edge_face_count[ei] += 1;
            }
            if !is_single_cycle(&graph, face) {
                return Err(Error::InvalidPolyhedron(format!(
                    "face {} is not a single cycle",
                    fi + 1
                )));
            }
        }
        if let Some(ei) = (1..=e).find(|&ei| edge_face_count[ei] != 2) {
            return Err(Error::InvalidPolyhedron(format!(
                "edge {ei} lies on {} faces, expected 2",
                edge_face_count[ei]
            )));
        }
        Ok(Polyhedron { graph, faces, name })
    }

    /// Builds the face lists from vertex cycles: each face is given as the
    /// cyclic vertex sequence around it.
    pub fn from_vertex_cycles(
        graph: SimpleGraph,
        face_cycles: &[Vec<usize>],
        name: Option<String>,
    ) -> Result<Polyhedron> {
        let index: HashMap<(usize, usize), usize> = graph
            .edges()
            .iter()
            .enumerate()
            .map(|(j, &(u, v))| ((u.min(v), u.max(v)), j + 1))
            .collect();
        let mut faces = Vec::with_capacity(face_cycles.len());
        for cycle in face_cycles {
            let mut face = Vec::with_capacity(cycle.len());
            for i in 0..cycle.len() {
                let (u, v) = (cycle[i], cycle[(i + 1) % cycle.len()]);
                let ei = index.get(&(u.min(v), u.max(v))).copied().ok_or_else(|| {
                    Error::InvalidPolyhedron(format!("face cycle uses missing edge ({u}, {v})"))
                })?;
                face.push(ei);
            }
            faces.push(face);
        }
        Polyhedron::new(graph, faces, name)
    }

    pub fn graph(&self) -> &SimpleGraph {
        &self.graph
    }

    pub fn faces(&self) -> &[Vec<usize>] {
        &self.faces
    }

    pub fn name(&self) -> Option<&str> {
        self.name.as_deref()
    }

    pub fn vertex_count(&self) -> usize {
        self.graph.vertex_count()
    }

    pub fn edge_count(&self) -> usize {
        self.graph.edge_count()
    }

    pub fn face_count(&self) -> usize {
        self.faces.len()
    }

    /// f x e matrix whose row i is the indicator of face i's edge set.
    pub fn face_matrix(&self) -> BitMatrix {
        let e = self.edge_count();
        let rows = self
            .faces
            .iter()
            .map(|face| {
                BitVector::from_indices(e, &face.iter().map(|&ei| ei - 1).collect::<Vec<_>>())
            })
            .collect();
        BitMatrix::from_rows_with_cols(rows, e)
    }

    pub fn to_json(&self) -> PolyhedronJson {
        PolyhedronJson {
            vertices: self.vertex_count(),
            edges: self.graph.edges().iter().map(|&(u, v)| [u, v]).collect(),
            faces: self.faces.clone(),
            name: self.name.clone(),
        }
    }

    pub fn from_json(json: &PolyhedronJson) -> Result<Polyhedron> {
        let graph = SimpleGraph::new(
            json.vertices,
            json.edges.iter().map(|&[u, v]| (u, v)).collect(),
        )?;
        Polyhedron::new(graph, json.faces.clone(), json.name.clone())
    }
}

/// Each face's edges must form one closed cycle: every touched vertex has
/// degree 2 within the face and the face edges are connected.
fn is_single_cycle(graph: &SimpleGraph, face: &[usize]) -> bool {
    let mut degree: HashMap<usize, usize> = HashMap::new();
    for &ei in face {
        let (u, v) = graph.edges()[ei - 1];
        *degree.entry(u).or_insert(0) += 1;
        *degree.entry(v).or_insert(0) += 1;
    }
    if degree.values().any(|&d| d != 2) {
        return false;
    }
    // Connectivity over the face's edges.
    let vertices: Vec<usize> = degree.keys().copied().collect();
    let mut reached: BTreeSet<usize> = BTreeSet::new();
    let mut stack = vec![vertices[0]];
    while let Some(u) = stack.pop() {
        if !reached.insert(u) {
            continue;
        }
        for &ei in face {
            let (a, b) = graph.edges()[ei - 1];
            if a == u {
                stack.push(b);
            } else if b == u {
                stack.push(a);
            }
        }
    }
    reached.len() == vertices.len()
}

#[derive(Serialize, Deserialize)]
pub struct PolyhedronJson {
    pub vertices: usize,
    pub edges: Vec<[usize; 2]>,
    pub faces: Vec<Vec<usize>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
}

/// The [e, f-1] code of a polyhedron (kernel of the vertex incidence matrix)
/// together with its f x e face matrix. The face rows all lie in the code and
/// span it; the face matrix has rank f - 1.
pub fn polyhedron_code(p: &Polyhedron) -> (LinearCode, BitMatrix) {
    let code = graph_code(p.graph());
    let faces = p.face_matrix();
    assert_eq!(
        code.k(),
        p.face_count() - 1,
        "polyhedron code dimension must be f - 1"
    );
    assert!(
        incidence_matrix(p.graph()).mul_transpose(&faces).is_zero(),
        "face vectors must satisfy all vertex parity checks"
    );
    assert_eq!(faces.rank(), p.face_count() - 1);
    (code, faces)
}

/// The five Platonic solids.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PlatonicSolid {
    Tetrahedron,
    Cube,
    Octahedron,
    Dodecahedron,
    Icosahedron,
}

impl PlatonicSolid {
    pub const ALL: [PlatonicSolid; 5] = [
        PlatonicSolid::Tetrahedron,
        PlatonicSolid::Cube,
        PlatonicSolid::Octahedron,
        PlatonicSolid::Dodecahedron,
        PlatonicSolid::Icosahedron,
    ];

    pub fn name(self) -> &'static str {
        match self {
            PlatonicSolid::Tetrahedron => "tetrahedron",
            PlatonicSolid::Cube => "cube",
            PlatonicSolid::Octahedron => "octahedron",
            PlatonicSolid::Dodecahedron => "dodecahedron",
            PlatonicSolid::Icosahedron => "icosahedron",
        }
    }

    /// Geometric dual: vertices and faces exchange.
    pub fn dual(self) -> PlatonicSolid {
        match self {
            PlatonicSolid::Tetrahedron => PlatonicSolid::Tetrahedron,
            PlatonicSolid::Cube => PlatonicSolid::Octahedron,
            PlatonicSolid::Octahedron => PlatonicSolid::Cube,
            PlatonicSolid::Dodecahedron => PlatonicSolid::Icosahedron,
            PlatonicSolid::Icosahedron => PlatonicSolid::Dodecahedron,
        }
    }
}

impl std::str::FromStr for PlatonicSolid {
    type Err = Error;

    fn from_str(s: &str) -> Result<PlatonicSolid> {
        match s.to_ascii_lowercase().as_str() {
            "tetrahedron" => Ok(PlatonicSolid::Tetrahedron),
            "cube" | "hexahedron" => Ok(PlatonicSolid::Cube),
            "octahedron" => Ok(PlatonicSolid::Octahedron),
            "dodecahedron" => Ok(PlatonicSolid::Dodecahedron),
            "icosahedron" => Ok(PlatonicSolid::Icosahedron),
            other => Err(Error::UnknownName(other.into())),
        }
    }
}

impl fmt::Display for PlatonicSolid {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Builds a Platonic solid under a fixed edge labeling.
///
/// Tetrahedron: vertices 1-4 = the vertices of K4; edges
/// (1,3),(1,2),(2,3),(3,4),(1,4),(2,4). Cube: vertices 1-4 top cycle, 5-8
/// bottom cycle; edges 1-4 top, 5-8 vertical, 9-12 bottom. Octahedron:
/// vertex 1 top, 2-5 equator, 6 bottom, labeled so that its vertex stars are
/// exactly the cube's face vectors and vice versa. Dodecahedron: top
/// pentagon 1-5, upper ring 6-10, lower ring 11-15, bottom pentagon 16-20.
/// Icosahedron: apex 1, upper pentagon 2-6, lower pentagon 7-11, apex 12.
pub fn platonic(solid: PlatonicSolid) -> Polyhedron {
    let p = |i: usize| (i % 5) + 1; // successor in a 1-based pentagon
    let result = match solid {
        PlatonicSolid::Tetrahedron => {
            let graph = SimpleGraph::new(4, vec![(1, 3), (1, 2), (2, 3), (3, 4), (1, 4), (2, 4)]);
            Polyhedron::from_vertex_cycles(
                graph.unwrap(),
                &[vec![1, 3, 4], vec![1, 2, 4], vec![2, 3, 4], vec![1, 2, 3]],
                Some("tetrahedron".into()),
            )
        }
        PlatonicSolid::Cube => {
            let edges = vec![
                (1, 2),
                (2, 3),
                (3, 4),
                (1, 4), // top cycle
                (1, 5),
                (2, 6),
                (3, 7),
                (4, 8), // verticals
                (5, 6),
                (6, 7),
                (7, 8),
                (5, 8), // bottom cycle
            ];
            let graph = SimpleGraph::new(8, edges);
            Polyhedron::from_vertex_cycles(
                graph.unwrap(),
                &[
                    vec![1, 2, 3, 4],
                    vec![1, 2, 6, 5],
                    vec![2, 3, 7, 6],
                    vec![3, 4, 8, 7],
                    vec![4, 1, 5, 8],
                    vec![5, 6, 7, 8],
                ],
                Some("cube".into()),
            )
        }
        PlatonicSolid::Octahedron => {
            let edges = vec![
                (1, 3),
                (1, 4),
                (1, 5),
                (1, 2), // apex 1 to equator
                (2, 3),
                (3, 4),
                (4, 5),
                (2, 5), // equator cycle
                (3, 6),
                (4, 6),
                (5, 6),
                (2, 6), // equator to apex 6
            ];
            let graph = SimpleGraph::new(6, edges);
            Polyhedron::from_vertex_cycles(
                graph.unwrap(),
                &[
                    vec![1, 2, 3],
                    vec![1, 3, 4],
                    vec![1, 4, 5],
                    vec![1, 5, 2],
                    vec![6, 3, 2],
                    vec![6, 4, 3],
                    vec![6, 5, 4],
                    vec![6, 2, 5],
                ],
                Some("octahedron".into()),
            )
        }
        PlatonicSolid::Dodecahedron => {
            let t = |i: usize| i;
            let u = |i: usize| 5 + i;
            let w = |i: usize| 10 + i;
            let b = |i: usize| 15 + i;
            let prev = |i: usize| if i == 1 { 5 } else { i - 1 };
            let mut edges = Vec::with_capacity(30);
            edges.extend((1..=5).map(|i| (t(i), t(p(i))))); // 1-5 top cycle
            edges.extend((1..=5).map(|i| (t(i), u(i)))); // 6-10 spokes
            for i in 1..=5 {
                edges.push((u(i), w(i))); // 11,13,.. zigzag down
                edges.push((u(i), w(prev(i)))); // 12,14,.. zigzag back
            }
            edges.extend((1..=5).map(|i| (w(i), b(i)))); // 21-25 spokes
            edges.extend((1..=5).map(|i| (b(i), b(p(i))))); // 26-30 bottom cycle
            let graph = SimpleGraph::new(20, edges);
            let mut cycles = vec![(1..=5).map(t).collect::<Vec<_>>()];
            for i in 1..=5 {
                cycles.push(vec![t(i), t(p(i)), u(p(i)), w(i), u(i)]);
            }
            for i in 1..=5 {
                cycles.push(vec![w(i), b(i), b(p(i)), w(p(i)), u(p(i))]);
            }
            cycles.push((1..=5).map(b).collect());
            Polyhedron::from_vertex_cycles(graph.unwrap(), &cycles, Some("dodecahedron".into()))
        }
        PlatonicSolid::Icosahedron => {
            let a = |i: usize| 1 + i;
            let b = |i: usize| 6 + i;
            let prev = |i: usize| if i == 1 { 5 } else { i - 1 };
            let mut edges = Vec::with_capacity(30);
            edges.extend((1..=5).map(|i| (1, a(i)))); // 1-5 apex to upper
            edges.extend((1..=5).map(|i| (a(i), a(p(i))))); // 6-10 upper cycle
            for i in 1..=5 {
                edges.push((a(i), b(i))); // 11,13,.. down
                edges.push((a(i), b(prev(i)))); // 12,14,.. down-back
            }
            edges.extend((1..=5).map(|i| (b(i), b(p(i))))); // 21-25 lower cycle
            edges.extend((1..=5).map(|i| (b(i), 12))); // 26-30 lower to apex
            let graph = SimpleGraph::new(12, edges);
            let mut cycles = Vec::with_capacity(20);
            for i in 1..=5 {
                cycles.push(vec![1, a(i), a(p(i))]);
            }
            for i in 1..=5 {
                cycles.push(vec![a(i), a(p(i)), b(i)]);
                cycles.push(vec![a(i), b(i), b(prev(i))]);
            }
            for i in 1..=5 {
                cycles.push(vec![12, b(i), b(p(i))]);
            }
            Polyhedron::from_vertex_cycles(graph.unwrap(), &cycles, Some("icosahedron".into()))
        }
    };
    result.expect("built-in polyhedra satisfy the invariants")
}

/// Cycle-space code of the complete graph K_q:
/// parameters [q(q-1)/2, (q-1)(q-2)/2]. Its dual is spanned by the q vertex
/// stars and has dimension q - 1.
pub fn complete_graph_code(q: usize) -> Result<LinearCode> {
    if q < 3 {
        return Err(Error::InvalidParameter(format!(
            "complete graph code needs q >= 3, got {q}"
        )));
    }
    Ok(graph_code(&SimpleGraph::complete(q)))
}

/// The [2^m - 1, m] Simplex code: generator columns are all nonzero m-bit
/// patterns, coordinate j carrying the binary representation of j.
pub fn simplex_code(m: usize) -> Result<LinearCode> {
    if m < 2 {
        return Err(Error::InvalidParameter(format!(
            "simplex code needs m >= 2, got {m}"
        )));
    }
    let n = (1usize << m) - 1;
    let mut g = BitMatrix::zeros(m, n);
    for j in 1..=n {
        for i in 0..m {
            if (j >> i) & 1 == 1 {
                g.set(i, j - 1, true);
            }
        }
    }
    LinearCode::from_generator(&g)
}

/// The [2^m - 1, 2^m - 1 - m] Hamming code, the dual of the Simplex code.
pub fn hamming_code(m: usize) -> Result<LinearCode> {
    Ok(simplex_code(m)?.dual())
}

/// A multiset of subsets of [n] (1-based points); the supports of candidate
/// covering codewords. Subsets are stored sorted.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoveringSystem {
    n: usize,
    subsets: Vec<Vec<usize>>,
}

impl CoveringSystem {
    pub fn new(n: usize, subsets: Vec<Vec<usize>>) -> Result<CoveringSystem> {
        let mut sorted = Vec::with_capacity(subsets.len());
        for s in subsets {
            if s.is_empty() {
                return Err(Error::InvalidParameter("empty covering subset".into()));
            }
            let set: BTreeSet<usize> = s.iter().copied().collect();
            if set.len() != s.len() {
                return Err(Error::InvalidParameter(format!(
                    "covering subset {s:?} repeats a point"
                )));
            }
            if let Some(&bad) = set.iter().find(|&&p| p < 1 || p > n) {
                return Err(Error::InvalidParameter(format!(
                    "point {bad} out of range 1..={n}"
                )));
            }
            sorted.push(set.into_iter().collect());
        }
        Ok(CoveringSystem { n, subsets: sorted })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn len(&self) -> usize {
        self.subsets.len()
    }

    pub fn is_empty(&self) -> bool {
        self.subsets.is_empty()
    }

    pub fn subsets(&self) -> &[Vec<usize>] {
        &self.subsets
    }

    /// Incidence matrix: one row per subset over n columns.
    pub fn to_matrix(&self) -> BitMatrix {
        let rows = self
            .subsets
            .iter()
            .map(|s| BitVector::from_indices(self.n, &s.iter().map(|&p| p - 1).collect::<Vec<_>>()))
            .collect();
        BitMatrix::from_rows_with_cols(rows, self.n)
    }

    /// Reads rows of a matrix back as subsets (1-based points).
    pub fn from_matrix(m: &BitMatrix) -> Result<CoveringSystem> {
        CoveringSystem::new(
            m.cols(),
            m.row_iter()
                .map(|r| r.support().iter().map(|&j| j + 1).collect())
                .collect(),
        )
    }

    /// Line-oriented format: first line "n N", then one subset per line as
    /// space-separated 1-based points.
    pub fn parse(input: &str) -> Result<CoveringSystem> {
        let mut lines = input
            .lines()
            .map(str::trim)
            .filter(|l| !l.is_empty() && !l.starts_with('#'));
        let header = lines
            .next()
            .ok_or_else(|| Error::Parse("empty covering-system file".into()))?;
        let mut it = header.split_whitespace();
        let n: usize = it
            .next()
            .and_then(|t| t.parse().ok())
            .ok_or_else(|| Error::Parse("header must be \"n N\"".into()))?;
        let count: usize = it
            .next()
            .and_then(|t| t.parse().ok())
            .ok_or_else(|| Error::Parse("header must be \"n N\"".into()))?;
        let mut subsets = Vec::with_capacity(count);
        for line in lines {
            let points = line
                .split_whitespace()
                .map(|t| {
                    t.parse::<usize>()
                        .map_err(|_| Error::Parse(format!("bad point {t:?}")))
                })
                .collect::<Result<Vec<_>>>()?;
            subsets.push(points);
        }
        if subsets.len() != count {
            return Err(Error::Parse(format!(
                "header declares {count} subsets, found {}",
                subsets.len()
            )));
        }
        CoveringSystem::new(n, subsets)
    }

    pub fn format(&self) -> String {
        let mut out = format!("{} {}\n", self.n, self.subsets.len());
        for s in &self.subsets {
            out.push_str(&s.iter().map(usize::to_string).collect::<Vec<_>>().join(" "));
            out.push('\n');
        }
        out
    }
}

/// The lines of the binary projective space PG(m-1, 2) as 3-subsets of
/// [2^m - 1]: {a, b, a XOR b} over the nonzero m-bit points. Every point lies
/// on 2^(m-1) - 1 lines and two lines meet in at most one point, so this is
/// the canonical (2, 2^(m-1) - 1) exact covering of the Simplex code.
pub fn projective_line_system(m: usize) -> Result<CoveringSystem> {
    if m < 2 {
        return Err(Error::InvalidParameter(format!(
            "projective line system needs m >= 2, got {m}"
        )));
    }
    let n = (1usize << m) - 1;
    let mut lines = BTreeSet::new();
    for a in 1..=n {
        for b in a + 1..=n {
            let c = a ^ b;
            let mut line = [a, b, c];
            line.sort_unstable();
            lines.insert(line);
        }
    }
    CoveringSystem::new(n, lines.into_iter().map(|l| l.to_vec()).collect())
}

/// The Fano plane: 7 triples on 7 points, every point on exactly 3 lines,
/// any two lines meeting in exactly one point. Its span is the [7,4] Hamming
/// code.
pub fn fano_covering_system() -> CoveringSystem {
    projective_line_system(3).expect("m = 3 is valid")
}

/// Validates that `h` is an exact-covering parity-check matrix (uniform row
/// weight r+1, uniform column weight t, pairwise row-support intersections
/// <= 1) and returns its transpose, which is a parity-check matrix of a code
/// of length nt/(r+1) with (t-1, r+1)-availability and exact covering.
pub fn transpose_transform(h: &BitMatrix) -> Result<BitMatrix> {
    let row_weights = h.row_weights();
    let Some(&rw) = row_weights.first() else {
        return Err(Error::NotExactCovering("matrix has no rows".into()));
    };
    if rw < 2 {
        return Err(Error::NotExactCovering(format!(
            "row weight {rw} is below 2"
        )));
    }
    if let Some(i) = row_weights.iter().position(|&w| w != rw) {
        return Err(Error::NotExactCovering(format!(
            "row {} has weight {}, expected uniform {rw}",
            i + 1,
            row_weights[i]
        )));
    }
    let col_weights = h.column_weights();
    let Some(&cw) = col_weights.first() else {
        return Err(Error::NotExactCovering("matrix has no columns".into()));
    };
    if cw == 0 {
        return Err(Error::NotExactCovering("zero column weight".into()));
    }
    if let Some(j) = col_weights.iter().position(|&w| w != cw) {
        return Err(Error::NotExactCovering(format!(
            "column {} has weight {}, expected uniform {cw}",
            j + 1,
            col_weights[j]
        )));
    }
    for i in 0..h.rows() {
        for j in i + 1..h.rows() {
            let overlap = h.row(i).and_weight(h.row(j));
            if overlap > 1 {
                return Err(Error::NotExactCovering(format!(
                    "rows {} and {} intersect in {overlap} points",
                    i + 1,
                    j + 1
                )));
            }
        }
    }
    // Row and column weights uniform forces N(r+1) = nt automatically.
    Ok(h.transpose())
}
