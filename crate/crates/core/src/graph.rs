//! Simple undirected graphs, constructors for the families that can be built
//! from their textual definitions, and planar-triangulation consistency
//! statistics.

use std::collections::BTreeSet;

use crate::error::{ChromaError, Result};
use crate::exact::Rat;

/// Immutable simple graph on vertices `0..n`. No loops, no multi-edges.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Graph {
    n: usize,
    adj: Vec<BTreeSet<usize>>,
}

impl Graph {
    pub fn empty(n: usize) -> Self {
        Graph {
            n,
            adj: vec![BTreeSet::new(); n],
        }
    }

    pub fn with_edges(n: usize, edges: &[(usize, usize)]) -> Self {
        let mut g = Graph::empty(n);
        for &(u, v) in edges {
            g.insert_edge(u, v);
        }
        g
    }

    fn insert_edge(&mut self, u: usize, v: usize) {
        assert!(u < self.n && v < self.n, "vertex out of range");
        if u == v {
            return; // no loops
        }
        self.adj[u].insert(v);
        self.adj[v].insert(u);
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|s| s.len()).sum::<usize>() / 2
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].contains(&v)
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.adj[v].iter().copied()
    }

    /// Sorted edge list with u < v.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = vec![];
        for u in 0..self.n {
            for &v in &self.adj[u] {
                if u < v {
                    out.push((u, v));
                }
            }
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        if self.n == 0 {
            return true;
        }
        let mut seen = vec![false; self.n];
        let mut stack = vec![0usize];
        seen[0] = true;
        let mut cnt = 1;
        while let Some(u) = stack.pop() {
            for &v in &self.adj[u] {
                if !seen[v] {
                    seen[v] = true;
                    cnt += 1;
                    stack.push(v);
                }
            }
        }
        cnt == self.n
    }

    /// Connected components as sorted vertex sets.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.n];
        let mut out = vec![];
        for s in 0..self.n {
            if seen[s] {
                continue;
            }
            let mut comp = vec![s];
            seen[s] = true;
            let mut stack = vec![s];
            while let Some(u) = stack.pop() {
                for &v in &self.adj[u] {
                    if !seen[v] {
                        seen[v] = true;
                        comp.push(v);
                        stack.push(v);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    pub fn is_complete(&self) -> bool {
        self.edge_count() == self.n * (self.n.saturating_sub(1)) / 2
    }

    /// Subgraph induced on `verts` (relabeled 0..k in the given order).
    pub fn induced(&self, verts: &[usize]) -> Graph {
        let mut g = Graph::empty(verts.len());
        for (i, &u) in verts.iter().enumerate() {
            for (j, &v) in verts.iter().enumerate() {
                if i < j && self.has_edge(u, v) {
                    g.insert_edge(i, j);
                }
            }
        }
        g
    }

    /// New graph with one edge removed.
    pub fn delete_edge(&self, u: usize, v: usize) -> Graph {
        let mut g = self.clone();
        g.adj[u].remove(&v);
        g.adj[v].remove(&u);
        g
    }

    /// Contract edge (u,v): merge v into u, drop loops and duplicate edges,
    /// relabel to 0..n−2.
    pub fn contract_edge(&self, u: usize, v: usize) -> Graph {
        let (u, v) = if u < v { (u, v) } else { (v, u) };
        let map = |w: usize| -> usize {
            if w == v {
                u
            } else if w > v {
                w - 1
            } else {
                w
            }
        };
        let mut g = Graph::empty(self.n - 1);
        for (a, b) in self.edges() {
            let (x, y) = (map(a), map(b));
            if x != y {
                g.insert_edge(x, y);
            }
        }
        g
    }

    /// Number of 3-cliques.
    pub fn count_triangles(&self) -> usize {
        let mut t = 0;
        for (u, v) in self.edges() {
            t += self.adj[u].intersection(&self.adj[v]).filter(|&&w| w > v).count();
        }
        t
    }

    /// Canonical labeling bytes; equal iff isomorphic (partition refinement
    /// with backtracking, intended for n ≤ ~20).
    pub fn canonical_form(&self) -> Vec<u8> {
        canon::canonical_form(self)
    }

    pub fn is_isomorphic(&self, other: &Graph) -> bool {
        self.n == other.n
            && self.edge_count() == other.edge_count()
            && self.canonical_form() == other.canonical_form()
    }
}

/// Complete graph K_s.
pub fn make_complete(s: usize) -> Graph {
    let mut g = Graph::empty(s);
    for u in 0..s {
        for v in (u + 1)..s {
            g.insert_edge(u, v);
        }
    }
    g
}

/// Path graph P_m on m vertices.
pub fn make_path(m: usize) -> Graph {
    let mut g = Graph::empty(m);
    for i in 1..m {
        g.insert_edge(i - 1, i);
    }
    g
}

/// Cycle C_m.
pub fn make_cycle(m: usize) -> Result<Graph> {
    if m < 3 {
        return Err(ChromaError::BadParameter(format!(
            "cycle needs m ≥ 3, got {m}"
        )));
    }
    let mut g = make_path(m);
    g.insert_edge(m - 1, 0);
    Ok(g)
}

/// Join G + H: disjoint union plus all cross edges.
pub fn join(g: &Graph, h: &Graph) -> Graph {
    let n = g.n + h.n;
    let mut out = Graph::empty(n);
    for (u, v) in g.edges() {
        out.insert_edge(u, v);
    }
    for (u, v) in h.edges() {
        out.insert_edge(g.n + u, g.n + v);
    }
    for u in 0..g.n {
        for v in 0..h.n {
            out.insert_edge(u, g.n + v);
        }
    }
    out
}

/// Bipyramid B_m: cycle C_m joined with two nonadjacent apexes.
/// n = m+2, e = 3m.
pub fn make_bipyramid(m: usize) -> Result<Graph> {
    if m < 3 {
        return Err(ChromaError::BadParameter(format!(
            "bipyramid needs m ≥ 3, got {m}"
        )));
    }
    Ok(join(&make_cycle(m)?, &Graph::empty(2)))
}

/// Wheel W_m = K_1 + C_m.
pub fn make_wheel(m: usize) -> Result<Graph> {
    Ok(join(&Graph::empty(1), &make_cycle(m)?))
}

/// R_m = P_m + P_2 (path joined with an edge); R_1 = K_3, R_2 = K_4.
pub fn make_r(m: usize) -> Result<Graph> {
    if m < 1 {
        return Err(ChromaError::BadParameter("R_m needs m ≥ 1".into()));
    }
    Ok(join(&make_path(m), &make_path(2)))
}

/// Triangular-cylinder strip TC_m: m stacked triangle layers, consecutive
/// layers joined antiprism-fashion so each pair forms an octahedron.
/// TC_1 = K_3, TC_2 = octahedron; n = 3m.
pub fn make_tc_strip(m: usize) -> Result<Graph> {
    if m < 1 {
        return Err(ChromaError::BadParameter(format!(
            "TC strip needs m ≥ 1, got {m}"
        )));
    }
    let mut g = Graph::empty(3 * m);
    for layer in 0..m {
        let base = 3 * layer;
        for j in 0..3 {
            g.insert_edge(base + j, base + (j + 1) % 3);
        }
        if layer + 1 < m {
            let next = base + 3;
            for j in 0..3 {
                g.insert_edge(base + j, next + j);
                g.insert_edge(base + j, next + (j + 1) % 3);
            }
        }
    }
    Ok(g)
}

/// Derived counts and consistency checks for a graph viewed as a candidate
/// planar triangulation.
#[derive(Clone, Debug, PartialEq)]
pub struct GraphStats {
    pub n: usize,
    pub e: usize,
    /// Faces implied by Euler's relation for a connected plane graph.
    pub f_implied: i64,
    /// Whether e = 3(n−2), the edge count every planar triangulation has.
    pub is_planar_triangulation_consistent: bool,
    /// Number of triangle subgraphs.
    pub n_t: usize,
    /// Chromatic number.
    pub chi: usize,
    /// Effective degree 2e/n.
    pub d_eff: Rat,
    /// Brown's bound u(G) = (e(e−n)+n−1)/(2(n−2)); fewer triangles than this
    /// forces complex chromatic zeros (meaningful for n ≥ 4).
    pub brown_u: Rat,
}

/// Fill all statistics; `chi` comes from the chromatic module.
pub fn stats(g: &Graph) -> Result<GraphStats> {
    let n = g.n();
    if n < 3 {
        return Err(ChromaError::BrownUndefined(n));
    }
    let e = g.edge_count();
    let (ni, ei) = (n as i64, e as i64);
    let brown_u = Rat::new(((ei * (ei - ni)) + ni - 1).into(), (2 * (ni - 2)).into());
    let chi = crate::chromatic::chromatic_number(g);
    Ok(GraphStats {
        n,
        e,
        f_implied: ei - ni + 2,
        is_planar_triangulation_consistent: ei == 3 * (ni - 2),
        n_t: g.count_triangles(),
        chi,
        d_eff: Rat::new((2 * ei).into(), ni.into()),
        brown_u,
    })
}

/// Edge-list export: one `u v` pair per line.
pub fn to_edge_list(g: &Graph) -> String {
    let mut s = String::new();
    for (u, v) in g.edges() {
        s.push_str(&format!("{u} {v}\n"));
    }
    s
}

/// Graphviz DOT export.
pub fn to_dot(g: &Graph, name: &str) -> String {
    let mut s = format!("graph {name} {{\n");
    for v in 0..g.n() {
        s.push_str(&format!("  {v};\n"));
    }
    for (u, v) in g.edges() {
        s.push_str(&format!("  {u} -- {v};\n"));
    }
    s.push_str("}\n");
    s
}

mod canon {
    use super::Graph;

    /// Canonical form: lexicographically smallest adjacency bit-matrix over
    /// the orbit explored by individualization-refinement.
    pub fn canonical_form(g: &Graph) -> Vec<u8> {
        let n = g.n();
        if n == 0 {
            return vec![];
        }
        let mut best: Option<Vec<u8>> = None;
        let colors = refine(g, &initial_colors(g));
        search(g, colors, &mut best);
        best.unwrap()
    }

    fn initial_colors(g: &Graph) -> Vec<usize> {
        // color by degree rank
        let n = g.n();
        let mut degs: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
        let mut sorted = degs.clone();
        sorted.sort_unstable();
        sorted.dedup();
        for d in degs.iter_mut() {
            *d = sorted.binary_search(d).unwrap();
        }
        degs
    }

    /// 1-WL color refinement until stable.
    fn refine(g: &Graph, colors: &[usize]) -> Vec<usize> {
        let n = g.n();
        let mut colors = colors.to_vec();
        loop {
            let mut sigs: Vec<(usize, Vec<usize>)> = (0..n)
                .map(|v| {
                    let mut nb: Vec<usize> = g.neighbors(v).map(|u| colors[u]).collect();
                    nb.sort_unstable();
                    (colors[v], nb)
                })
                .collect();
            let mut uniq = sigs.clone();
            uniq.sort();
            uniq.dedup();
            let new: Vec<usize> = sigs
                .drain(..)
                .map(|s| uniq.binary_search(&s).unwrap())
                .collect();
            if new == colors {
                return new;
            }
            colors = new;
        }
    }

    fn search(g: &Graph, colors: Vec<usize>, best: &mut Option<Vec<u8>>) {
        let n = g.n();
        // smallest non-singleton color class
        let mut class: Option<Vec<usize>> = None;
        for c in 0..n {
            let members: Vec<usize> = (0..n).filter(|&v| colors[v] == c).collect();
            if members.len() > 1 && class.as_ref().is_none_or(|m| members.len() < m.len()) {
                class = Some(members);
            }
        }
        match class {
            None => {
                // discrete coloring: colors define a permutation
                let mut perm = vec![0usize; n];
                for v in 0..n {
                    perm[colors[v]] = v;
                }
                let mut bytes = Vec::with_capacity(n * n / 16 + 1);
                let mut acc = 0u8;
                let mut bits = 0;
                for i in 0..n {
                    for j in (i + 1)..n {
                        acc = (acc << 1) | u8::from(g.has_edge(perm[i], perm[j]));
                        bits += 1;
                        if bits == 8 {
                            bytes.push(acc);
                            acc = 0;
                            bits = 0;
                        }
                    }
                }
                if bits > 0 {
                    bytes.push(acc << (8 - bits));
                }
                if best.as_ref().is_none_or(|b| &bytes < b) {
                    *best = Some(bytes);
                }
            }
            Some(members) => {
                for &v in &members {
                    // individualize v with a fresh color just below its class
                    let mut c2: Vec<usize> = colors.iter().map(|&c| 2 * c + 1).collect();
                    c2[v] = 2 * colors[v];
                    let c2 = normalize(&c2);
                    search(g, refine(g, &c2), best);
                }
            }
        }
    }

    fn normalize(colors: &[usize]) -> Vec<usize> {
        let mut uniq: Vec<usize> = colors.to_vec();
        uniq.sort_unstable();
        uniq.dedup();
        colors
            .iter()
            .map(|c| uniq.binary_search(c).unwrap())
            .collect()
    }
}
