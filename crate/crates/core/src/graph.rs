//! Directed graphs over automaton states: reachability, transitive closure,
//! and canonical shortest-path reconstruction.

use crate::model::Letter;

/// A digraph whose arcs may carry a letter label.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Digraph {
    vertex_count: usize,
    out: Vec<Vec<(Option<Letter>, usize)>>,
}

impl Digraph {
    pub fn new(vertex_count: usize) -> Self {
        Digraph {
            vertex_count,
            out: vec![Vec::new(); vertex_count],
        }
    }

    pub fn add_arc(&mut self, from: usize, label: Option<Letter>, to: usize) {
        assert!(from < self.vertex_count && to < self.vertex_count);
        self.out[from].push((label, to));
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn out(&self, v: usize) -> &[(Option<Letter>, usize)] {
        &self.out[v]
    }

    pub fn arcs(&self) -> impl Iterator<Item = (usize, Option<Letter>, usize)> + '_ {
        self.out
            .iter()
            .enumerate()
            .flat_map(|(u, row)| row.iter().map(move |&(l, v)| (u, l, v)))
    }

    pub fn arc_count(&self) -> usize {
        self.out.iter().map(Vec::len).sum()
    }
}

/// The reflexive-transitive reachability relation of a digraph, stored as a
/// bit matrix. `reaches(p, p)` is always true: paths of length zero count.
#[derive(Clone, Debug)]
pub struct Reachability {
    n: usize,
    row_words: usize,
    bits: Vec<u64>,
}

impl Reachability {
    pub fn reaches(&self, from: usize, to: usize) -> bool {
        debug_assert!(from < self.n && to < self.n);
        self.bits[from * self.row_words + to / 64] & (1 << (to % 64)) != 0
    }
}

/// Floyd–Warshall closure with bit-parallel rows, O(n³/64).
pub fn transitive_closure(g: &Digraph) -> Reachability {
    let n = g.vertex_count();
    let row_words = n.div_ceil(64);
    let mut bits = vec![0u64; n * row_words];
    for v in 0..n {
        bits[v * row_words + v / 64] |= 1 << (v % 64);
    }
    for (u, _, v) in g.arcs() {
        bits[u * row_words + v / 64] |= 1 << (v % 64);
    }
    for k in 0..n {
        for i in 0..n {
            if bits[i * row_words + k / 64] & (1 << (k % 64)) != 0 {
                let (head, tail) = bits.split_at_mut(k.max(i) * row_words);
                let (row_i, row_k) = if i < k {
                    (
                        &mut head[i * row_words..i * row_words + row_words],
                        &tail[..row_words],
                    )
                } else if i > k {
                    (
                        &mut tail[..row_words],
                        &head[k * row_words..k * row_words + row_words],
                    )
                } else {
                    continue;
                };
                for (w_i, w_k) in row_i.iter_mut().zip(row_k) {
                    *w_i |= *w_k;
                }
            }
        }
    }
    Reachability { n, row_words, bits }
}

/// Vertices reachable from `src` along arcs (including `src` itself).
pub fn forward_reachable(g: &Digraph, src: usize) -> Vec<bool> {
    let mut seen = vec![false; g.vertex_count()];
    if g.vertex_count() == 0 {
        return seen;
    }
    seen[src] = true;
    let mut stack = vec![src];
    while let Some(u) = stack.pop() {
        for &(_, v) in g.out(u) {
            if !seen[v] {
                seen[v] = true;
                stack.push(v);
            }
        }
    }
    seen
}

/// Vertices from which some target vertex is reachable.
pub fn backward_reachable(g: &Digraph, targets: &[bool]) -> Vec<bool> {
    let n = g.vertex_count();
    let mut rev: Vec<Vec<usize>> = vec![Vec::new(); n];
    for (u, _, v) in g.arcs() {
        rev[v].push(u);
    }
    let mut seen = vec![false; n];
    let mut stack: Vec<usize> = (0..n).filter(|&v| targets[v]).collect();
    for &v in &stack {
        seen[v] = true;
    }
    while let Some(u) = stack.pop() {
        for &w in &rev[u] {
            if !seen[w] {
                seen[w] = true;
                stack.push(w);
            }
        }
    }
    seen
}

/// Shortest distance from every vertex to the nearest target, or `None` when
/// no target is reachable.
pub fn distances_to(g: &Digraph, targets: &[bool]) -> Vec<Option<usize>> {
    let n = g.vertex_count();
    let mut rev: Vec<Vec<usize>> = vec![Vec::new(); n];
    for (u, _, v) in g.arcs() {
        rev[v].push(u);
    }
    let mut dist = vec![None; n];
    let mut queue = std::collections::VecDeque::new();
    for v in 0..n {
        if targets[v] {
            dist[v] = Some(0);
            queue.push_back(v);
        }
    }
    while let Some(u) = queue.pop_front() {
        let d = dist[u].unwrap();
        for &w in &rev[u] {
            if dist[w].is_none() {
                dist[w] = Some(d + 1);
                queue.push_back(w);
            }
        }
    }
    dist
}

/// The shortest labeled path from `src` to any target vertex, breaking ties
/// toward the lexicographically least label word (letters compare in
/// declared order). Unlabeled arcs are ignored. Returns the arc list; an
/// empty list means `src` is itself a target.
pub fn lex_shortest_path_to_any(
    g: &Digraph,
    src: usize,
    targets: &[bool],
) -> Option<Vec<(Letter, usize)>> {
    let dist = distances_to(g, targets);
    let mut remaining = dist[src]?;
    let mut path = Vec::with_capacity(remaining);
    let mut cur = src;
    while remaining > 0 {
        let mut best: Option<(Letter, usize)> = None;
        for &(label, v) in g.out(cur) {
            let Some(letter) = label else { continue };
            if dist[v] == Some(remaining - 1) {
                let candidate = (letter, v);
                if best.is_none_or(|b| candidate < b) {
                    best = Some(candidate);
                }
            }
        }
        let (letter, v) = best.expect("a vertex on a shortest path has a successor on one");
        path.push((letter, v));
        cur = v;
        remaining -= 1;
    }
    Some(path)
}

/// The shortest labeled path from `src` to `dst`, lexicographically least
/// among shortest ones.
pub fn lex_shortest_path(g: &Digraph, src: usize, dst: usize) -> Option<Vec<(Letter, usize)>> {
    let mut targets = vec![false; g.vertex_count()];
    targets[dst] = true;
    lex_shortest_path_to_any(g, src, &targets)
}

/// The shortest cycle through `v`, lexicographically least among shortest
/// ones; `None` when `v` lies on no cycle. The result is the arc list
/// starting and ending at `v` (length ≥ 1).
pub fn lex_shortest_cycle_through(g: &Digraph, v: usize) -> Option<Vec<(Letter, usize)>> {
    let mut targets = vec![false; g.vertex_count()];
    targets[v] = true;
    let dist = distances_to(g, &targets);
    let mut best: Option<(usize, Letter, usize)> = None;
    for &(label, w) in g.out(v) {
        let Some(letter) = label else { continue };
        if let Some(d) = dist[w] {
            let candidate = (d + 1, letter, w);
            if best.is_none_or(|b| candidate < b) {
                best = Some(candidate);
            }
        }
    }
    let (len, letter, first) = best?;
    let mut path = vec![(letter, first)];
    let mut cur = first;
    let mut remaining = len - 1;
    while remaining > 0 {
        let mut step: Option<(Letter, usize)> = None;
        for &(label, w) in g.out(cur) {
            let Some(l) = label else { continue };
            if dist[w] == Some(remaining - 1) {
                let candidate = (l, w);
                if step.is_none_or(|b| candidate < b) {
                    step = Some(candidate);
                }
            }
        }
        let (l, w) = step.expect("cycle reconstruction follows shortest distances");
        path.push((l, w));
        cur = w;
        remaining -= 1;
    }
    debug_assert_eq!(path.last().unwrap().1, v);
    Some(path)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn closure_of_two_vertex_cycle_is_full() {
        let mut g = Digraph::new(2);
        g.add_arc(0, Some(0), 1);
        g.add_arc(1, Some(1), 0);
        let r = transitive_closure(&g);
        for p in 0..2 {
            for q in 0..2 {
                assert!(r.reaches(p, q));
            }
        }
    }

    #[test]
    fn closure_without_arcs_is_reflexive_only() {
        let g = Digraph::new(3);
        let r = transitive_closure(&g);
        for p in 0..3 {
            for q in 0..3 {
                assert_eq!(r.reaches(p, q), p == q);
            }
        }
    }

    #[test]
    fn closure_of_chain() {
        let mut g = Digraph::new(3);
        g.add_arc(0, None, 1);
        g.add_arc(1, None, 2);
        let r = transitive_closure(&g);
        assert!(r.reaches(0, 2));
        assert!(!r.reaches(2, 0));
        assert!(r.reaches(1, 1));
    }

    #[test]
    fn lex_path_prefers_smaller_letters() {
        // Two shortest paths 0→2: via letter 1 then 0, or letter 0 then 1.
        let mut g = Digraph::new(4);
        g.add_arc(0, Some(1), 1);
        g.add_arc(1, Some(0), 2);
        g.add_arc(0, Some(0), 3);
        g.add_arc(3, Some(1), 2);
        let path = lex_shortest_path(&g, 0, 2).unwrap();
        let labels: Vec<Letter> = path.iter().map(|&(l, _)| l).collect();
        assert_eq!(labels, vec![0, 1]);
    }

    #[test]
    fn lex_path_to_self_is_empty() {
        let g = Digraph::new(1);
        assert_eq!(lex_shortest_path(&g, 0, 0).unwrap(), Vec::new());
    }

    #[test]
    fn shortest_cycle_is_found() {
        let mut g = Digraph::new(3);
        g.add_arc(0, Some(0), 1);
        g.add_arc(1, Some(1), 0);
        g.add_arc(1, Some(0), 2);
        let cycle = lex_shortest_cycle_through(&g, 0).unwrap();
        assert_eq!(cycle, vec![(0, 1), (1, 0)]);
        assert!(lex_shortest_cycle_through(&g, 2).is_none());
    }
}
