//! Chromatic polynomials by deletion–contraction with structural shortcuts,
//! plus a brute-force proper-coloring oracle for small graphs.

use std::collections::HashMap;

use num_traits::{Signed, ToPrimitive};

use crate::error::{ChromaError, Result};
use crate::exact::{rat, Poly};
use crate::graph::Graph;

/// Which edge deletion–contraction recurses on.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum EdgePick {
    /// An edge incident to a maximum-degree vertex, smallest labels breaking ties.
    MaxDegreeEndpoint,
    /// The first edge in sorted order.
    First,
}

/// Engine configuration. All settings change only speed, never the result.
#[derive(Clone, Copy, Debug)]
pub struct DCConfig {
    pub use_memo: bool,
    pub use_clique_shortcut: bool,
    pub edge_pick: EdgePick,
}

impl Default for DCConfig {
    fn default() -> Self {
        DCConfig {
            use_memo: true,
            use_clique_shortcut: true,
            edge_pick: EdgePick::MaxDegreeEndpoint,
        }
    }
}

/// Memoization is keyed by canonical form, only for subproblems this small.
const MEMO_MAX_N: usize = 20;

/// Exact chromatic polynomial P(g, q).
pub fn chromatic_poly(g: &Graph, cfg: &DCConfig) -> Poly {
    let mut memo: HashMap<Vec<u8>, Poly> = HashMap::new();
    dc(g, cfg, &mut memo)
}

/// Chromatic polynomial with the default configuration.
pub fn chromatic_poly_default(g: &Graph) -> Poly {
    chromatic_poly(g, &DCConfig::default())
}

fn dc(g: &Graph, cfg: &DCConfig, memo: &mut HashMap<Vec<u8>, Poly>) -> Poly {
    let n = g.n();
    let e = g.edge_count();
    if e == 0 {
        return Poly::q().pow(n);
    }
    if g.is_complete() {
        return Poly::falling_factorial(n);
    }

    let comps = g.components();
    if comps.len() > 1 {
        let mut p = Poly::one();
        for c in comps {
            p = &p * &dc(&g.induced(&c), cfg, memo);
        }
        return p;
    }

    let key = if cfg.use_memo && n <= MEMO_MAX_N {
        let k = g.canonical_form();
        if let Some(p) = memo.get(&k) {
            return p.clone();
        }
        Some(k)
    } else {
        None
    };

    let result = if let Some((sep, mut pieces)) = cfg
        .use_clique_shortcut
        .then(|| find_clique_separator(g))
        .flatten()
    {
        // Complete-graph intersection: P(G ∪ H) = P(G)·P(H)/P(K_s) when
        // G ∩ H = K_s.
        let pks = Poly::falling_factorial(sep.len());
        let mut p = dc(&g.induced(&pieces.pop().unwrap()), cfg, memo);
        for piece in pieces {
            let pp = dc(&g.induced(&piece), cfg, memo);
            p = (&p * &pp)
                .exact_div(&pks)
                .expect("P(K_s) divides the glued product");
        }
        p
    } else {
        let (u, v) = pick_edge(g, cfg.edge_pick);
        let del = dc(&g.delete_edge(u, v), cfg, memo);
        let con = dc(&g.contract_edge(u, v), cfg, memo);
        &del - &con
    };

    if let Some(k) = key {
        memo.insert(k, result.clone());
    }
    result
}

fn pick_edge(g: &Graph, pick: EdgePick) -> (usize, usize) {
    match pick {
        EdgePick::First => g.edges()[0],
        EdgePick::MaxDegreeEndpoint => {
            let n = g.n();
            let mut best_v = 0;
            for v in 1..n {
                if g.degree(v) > g.degree(best_v) {
                    best_v = v;
                }
            }
            // among best_v's neighbors, the highest-degree one; ties by label
            let mut best_u = usize::MAX;
            let mut best_deg = 0;
            for u in g.neighbors(best_v) {
                let d = g.degree(u);
                if d > best_deg || (d == best_deg && u < best_u) {
                    best_deg = d;
                    best_u = u;
                }
            }
            if best_u < best_v {
                (best_u, best_v)
            } else {
                (best_v, best_u)
            }
        }
    }
}

/// Look for a separating clique of size 1..=4. Returns the separator and the
/// vertex sets of the glued parts (each part = component ∪ separator).
fn find_clique_separator(g: &Graph) -> Option<(Vec<usize>, Vec<Vec<usize>>)> {
    let n = g.n();
    for s in 1..=4.min(n.saturating_sub(1)) {
        for sep in cliques_of_size(g, s) {
            if let Some(parts) = split_by(g, &sep) {
                return Some((sep, parts));
            }
        }
    }
    None
}

fn cliques_of_size(g: &Graph, s: usize) -> Vec<Vec<usize>> {
    fn rec(g: &Graph, start: usize, s: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == s {
            out.push(cur.clone());
            return;
        }
        for v in start..g.n() {
            if cur.iter().all(|&u| g.has_edge(u, v)) {
                cur.push(v);
                rec(g, v + 1, s, cur, out);
                cur.pop();
            }
        }
    }
    let mut out = vec![];
    let mut cur = vec![];
    rec(g, 0, s, &mut cur, &mut out);
    out
}

fn split_by(g: &Graph, sep: &[usize]) -> Option<Vec<Vec<usize>>> {
    let n = g.n();
    let mut seen = vec![false; n];
    for &v in sep {
        seen[v] = true;
    }
    let mut comps: Vec<Vec<usize>> = vec![];
    for start in 0..n {
        if seen[start] {
            continue;
        }
        let mut comp = vec![start];
        seen[start] = true;
        let mut stack = vec![start];
        while let Some(u) = stack.pop() {
            for v in g.neighbors(u) {
                if !seen[v] {
                    seen[v] = true;
                    comp.push(v);
                    stack.push(v);
                }
            }
        }
        comps.push(comp);
    }
    if comps.len() < 2 {
        return None;
    }
    Some(
        comps
            .into_iter()
            .map(|mut c| {
                c.extend_from_slice(sep);
                c.sort_unstable();
                c
            })
            .collect(),
    )
}

/// Guard limits for exhaustive coloring enumeration.
const BRUTE_MAX_N: usize = 12;
const BRUTE_MAX_Q: u64 = 8;

/// Count proper q-colorings by backtracking enumeration.
pub fn brute_force_count(g: &Graph, q: u64) -> Result<u64> {
    if g.n() > BRUTE_MAX_N || q > BRUTE_MAX_Q {
        return Err(ChromaError::TooLarge(format!(
            "n = {}, q = {q} (limits: n ≤ {BRUTE_MAX_N}, q ≤ {BRUTE_MAX_Q})",
            g.n()
        )));
    }
    fn rec(g: &Graph, q: u64, v: usize, colors: &mut Vec<u64>, count: &mut u64) {
        if v == g.n() {
            *count += 1;
            return;
        }
        'outer: for c in 0..q {
            for u in g.neighbors(v) {
                if u < v && colors[u] == c {
                    continue 'outer;
                }
            }
            colors[v] = c;
            rec(g, q, v + 1, colors, count);
        }
        colors[v] = u64::MAX;
    }
    let n = g.n();
    if n == 0 {
        return Ok(1);
    }
    let mut colors = vec![u64::MAX; n];
    let mut count = 0u64;
    rec(g, q, 0, &mut colors, &mut count);
    Ok(count)
}

/// χ(g): least positive k with P(g, k) > 0.
pub fn chromatic_number(g: &Graph) -> usize {
    let p = chromatic_poly_default(g);
    for k in 1..=(g.n().max(1) as i64) {
        if p.eval_i64(k).is_positive() {
            return k as usize;
        }
    }
    g.n().max(1)
}

/// A graph is k-critical iff χ(G) = k and P(G, k) = k!.
pub fn is_k_critical(g: &Graph) -> bool {
    let p = chromatic_poly_default(g);
    let mut chi = g.n().max(1);
    for k in 1..=(g.n().max(1) as i64) {
        if p.eval_i64(k).is_positive() {
            chi = k as usize;
            break;
        }
    }
    let mut fact = rat(1);
    for j in 2..=chi as i64 {
        fact *= rat(j);
    }
    p.eval_i64(chi as i64) == fact
}

/// Evaluate a chromatic polynomial at a nonnegative integer, as u64.
pub fn eval_at_int(p: &Poly, q: i64) -> Option<u64> {
    let v = p.eval_i64(q);
    if v.denom() == &num_bigint::BigInt::from(1) && !v.numer().is_negative() {
        v.numer().to_u64()
    } else {
        None
    }
}

/// `q(q−1)(q−2)`, the chromatic polynomial of the triangle (a factor of
/// every triangulation's chromatic polynomial).
pub fn p_k3() -> Poly {
    Poly::falling_factorial(3)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{make_bipyramid, make_complete, make_cycle, make_path, make_r, make_tc_strip};
    use num_traits::Zero;

    fn lam_tc() -> Poly {
        Poly::from_ints(&[-32, 29, -9, 1])
    }

    #[test]
    fn base_cases() {
        let k3 = make_complete(3);
        assert_eq!(chromatic_poly_default(&k3), Poly::falling_factorial(3));
        let e3 = Graph::empty(3);
        assert_eq!(chromatic_poly_default(&e3), Poly::q().pow(3));
        // path: q(q−1)^{m−1}
        let p4 = make_path(4);
        assert_eq!(
            chromatic_poly_default(&p4),
            &Poly::q() * &Poly::linear(-1).pow(3)
        );
        // cycle: (q−1)^m + (−1)^m (q−1)
        let c5 = make_cycle(5).unwrap();
        let q1 = Poly::linear(-1);
        assert_eq!(chromatic_poly_default(&c5), &q1.pow(5) - &q1);
    }

    #[test]
    fn octahedron_is_k3_times_lam_tc() {
        let oct = make_bipyramid(4).unwrap();
        let p = chromatic_poly_default(&oct);
        assert_eq!(p, &p_k3() * &lam_tc());
        for q in 3..=8u64 {
            assert_eq!(
                eval_at_int(&p, q as i64).unwrap(),
                brute_force_count(&oct, q).unwrap()
            );
        }
        assert_eq!(brute_force_count(&oct, 3).unwrap(), 6);
    }

    #[test]
    fn tc_strips_are_lam_tc_powers() {
        for m in 1..=4 {
            let tc = make_tc_strip(m).unwrap();
            let p = chromatic_poly_default(&tc);
            assert_eq!(p, &p_k3() * &lam_tc().pow(m - 1));
        }
    }

    #[test]
    fn brute_force_guards_and_values() {
        let k3 = make_complete(3);
        assert_eq!(brute_force_count(&k3, 3).unwrap(), 6);
        let k4 = make_complete(4);
        assert_eq!(brute_force_count(&k4, 3).unwrap(), 0);
        assert!(matches!(
            brute_force_count(&Graph::empty(13), 2),
            Err(ChromaError::TooLarge(_))
        ));
        assert!(matches!(
            brute_force_count(&k3, 9),
            Err(ChromaError::TooLarge(_))
        ));
    }

    #[test]
    fn chromatic_numbers() {
        assert_eq!(chromatic_number(&make_complete(4)), 4);
        assert_eq!(chromatic_number(&make_bipyramid(4).unwrap()), 3);
        assert_eq!(chromatic_number(&make_bipyramid(5).unwrap()), 4);
        for m in 1..=4 {
            assert_eq!(chromatic_number(&make_tc_strip(m).unwrap()), 3);
        }
    }

    #[test]
    fn criticality() {
        assert!(is_k_critical(&make_tc_strip(2).unwrap())); // 3-critical
        assert!(is_k_critical(&make_complete(4)));
        assert!(!is_k_critical(&make_bipyramid(5).unwrap()));
        for m in 2..=5 {
            assert!(is_k_critical(&make_r(m).unwrap())); // R_m is 4-critical
        }
    }

    #[test]
    fn config_invariance() {
        let g = make_bipyramid(5).unwrap();
        let configs = [
            DCConfig::default(),
            DCConfig {
                use_memo: false,
                use_clique_shortcut: false,
                edge_pick: EdgePick::First,
            },
            DCConfig {
                use_memo: true,
                use_clique_shortcut: false,
                edge_pick: EdgePick::MaxDegreeEndpoint,
            },
            DCConfig {
                use_memo: false,
                use_clique_shortcut: true,
                edge_pick: EdgePick::First,
            },
        ];
        let ps: Vec<Poly> = configs.iter().map(|c| chromatic_poly(&g, c)).collect();
        for p in &ps[1..] {
            assert_eq!(p, &ps[0]);
        }
    }

    #[test]
    fn degree_sign_structure() {
        let g = make_bipyramid(6).unwrap();
        let p = chromatic_poly_default(&g);
        assert_eq!(p.degree(), g.n());
        assert_eq!(p.leading(), rat(1));
        // coefficients alternate in sign
        for i in 0..=p.degree() {
            let c = p.coeff(i);
            if !c.is_zero() {
                let expect_pos = (p.degree() - i).is_multiple_of(2);
                assert_eq!(c.is_positive(), expect_pos, "coeff {i} of {p}");
            }
        }
        // P(0) = P(1) = 0 for any connected graph with an edge
        assert!(p.eval_i64(0).is_zero());
        assert!(p.eval_i64(1).is_zero());
    }
}
