//! Reconstruction of a multicurve from its coordinates.
//!
//! Vertical chords `beta_1 .. beta_{m-1}` between consecutive punctures cut
//! the disk into strips; strip `j` holds puncture `P_j`. Inside an interior
//! strip a minimal multicurve consists of four kinds of strands: `A` passing
//! above `P_j`, `B` passing below, `L` loops entering from the left chord and
//! turning around `P_j`, and `R` loops entering from the right. At most one
//! of `L`, `R` is nonzero. The end strips hold nested loops only.
//!
//! On each chord the crossing points are stacked top to bottom as: through
//! strands above, upper loop ends, lower loop ends (nested), through strands
//! below. Gluing strips along chords by position gives a 2-regular graph
//! whose cycles are the components.

use super::word::CrossingWord;

/// Strand counts of one interior strip.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Strip {
    pub above: i64,
    pub below: i64,
    pub left_loops: i64,
    pub right_loops: i64,
}

/// Chord counts `beta[1..m-1]` (with `beta[0] = beta[m] = 0`) and interior
/// strips `strips[j]` for `2 <= j <= m-1`.
#[derive(Clone, Debug)]
pub struct Diagram {
    pub punctures: usize,
    pub beta: Vec<i64>,
    pub strips: Vec<Strip>,
}

/// `a[j]`, `b[j]` are indexed by interior puncture `j` (entries 0, 1 and
/// `m` are ignored).
pub fn build(punctures: usize, a: &[i64], b: &[i64]) -> Diagram {
    let m = punctures;
    let mut best = 0i64;
    let mut prefix = 0i64;
    for k in 2..m {
        best = best.max(a[k].abs() + b[k].max(0) + prefix);
        prefix += b[k];
    }
    let mut beta = vec![0i64; m + 1];
    beta[1] = 2 * best;
    for j in 2..m {
        beta[j] = beta[j - 1] - 2 * b[j];
    }
    let mut strips = vec![Strip { above: 0, below: 0, left_loops: 0, right_loops: 0 }; m + 1];
    for j in 2..m {
        let l = b[j].max(0);
        let r = (-b[j]).max(0);
        let half = beta[j - 1] / 2 - l;
        strips[j] = Strip { above: half - a[j], below: half + a[j], left_loops: l, right_loops: r };
    }
    Diagram { punctures: m, beta, strips }
}

#[derive(Clone, Copy)]
struct Arc {
    ends: [usize; 2],
    // crossings met walking from ends[0] to ends[1]
    letters: [u8; 3],
    count: u8,
}

struct Graph {
    // per node: arc in the strip to its left and to its right
    left: Vec<usize>,
    right: Vec<usize>,
    above: Vec<bool>,
    arcs: Vec<Arc>,
}

impl Diagram {
    fn node(&self, offsets: &[usize], chord: usize, idx: i64) -> usize {
        offsets[chord] + idx as usize
    }

    fn graph(&self) -> Graph {
        let m = self.punctures;
        let mut offsets = vec![0usize; m + 1];
        let mut total = 0usize;
        for j in 1..m {
            offsets[j] = total;
            total += self.beta[j] as usize;
        }
        let mut above = vec![false; total];
        for j in 1..m {
            for i in 0..self.beta[j] {
                above[offsets[j] + i as usize] = i < self.beta[j] / 2;
            }
        }
        let mut g = Graph { left: vec![usize::MAX; total], right: vec![usize::MAX; total], above, arcs: Vec::new() };

        let push = |g: &mut Graph, u: usize, v: usize, seq: &[Option<u8>], u_left: bool, v_left: bool| {
            let mut letters = [0u8; 3];
            let mut count = 0u8;
            for x in seq.iter().flatten() {
                letters[count as usize] = *x;
                count += 1;
            }
            let id = g.arcs.len();
            g.arcs.push(Arc { ends: [u, v], letters, count });
            // u_left: the arc lies to the left of node u
            if u_left { g.left[u] = id } else { g.right[u] = id }
            if v_left { g.left[v] = id } else { g.right[v] = id }
        };
        let when = |cond: bool, x: usize| if cond { Some(x as u8) } else { None };

        // end strips: nested loops around P_1 and P_m
        let b1 = self.beta[1];
        for r in 0..b1 / 2 {
            let (u, v) = (self.node(&offsets, 1, r), self.node(&offsets, 1, b1 - 1 - r));
            let seq = [when(!g.above[u], 1), Some(0), when(g.above[v], 1)];
            push(&mut g, u, v, &seq, true, true);
        }
        let bl = self.beta[m - 1];
        for r in 0..bl / 2 {
            let (u, v) = (self.node(&offsets, m - 1, r), self.node(&offsets, m - 1, bl - 1 - r));
            let seq = [when(!g.above[u], m - 1), Some(m as u8), when(g.above[v], m - 1)];
            push(&mut g, u, v, &seq, false, false);
        }

        for j in 2..m {
            let s = self.strips[j];
            let (lc, rc) = (j - 1, j);
            for i in 0..s.above {
                let (u, v) = (self.node(&offsets, lc, i), self.node(&offsets, rc, i));
                let seq = [when(!g.above[u], j - 1), when(!g.above[v], j), None];
                push(&mut g, u, v, &seq, false, true);
            }
            for k in 0..s.left_loops {
                let u = self.node(&offsets, lc, s.above + s.left_loops - 1 - k);
                let v = self.node(&offsets, lc, s.above + s.left_loops + k);
                let seq = [when(!g.above[u], j - 1), Some(j as u8), when(g.above[v], j - 1)];
                push(&mut g, u, v, &seq, false, false);
            }
            for k in 0..s.right_loops {
                let u = self.node(&offsets, rc, s.above + s.right_loops - 1 - k);
                let v = self.node(&offsets, rc, s.above + s.right_loops + k);
                let seq = [when(!g.above[u], j), Some((j - 1) as u8), when(g.above[v], j)];
                push(&mut g, u, v, &seq, true, true);
            }
            for i in 0..s.below {
                let u = self.node(&offsets, lc, s.above + 2 * s.left_loops + i);
                let v = self.node(&offsets, rc, s.above + 2 * s.right_loops + i);
                let seq = [when(g.above[u], j - 1), when(g.above[v], j), None];
                push(&mut g, u, v, &seq, false, true);
            }
        }
        g
    }

    /// Components as reduced crossing words, in order of first chord point.
    pub fn trace(&self) -> Vec<CrossingWord> {
        let g = self.graph();
        let total = g.above.len();
        debug_assert!(g.left.iter().chain(&g.right).all(|&a| a != usize::MAX));
        let mut seen = vec![false; total];
        let mut out = Vec::new();
        for start in 0..total {
            if seen[start] {
                continue;
            }
            let mut letters = Vec::new();
            let mut cur = start;
            let mut arc_id = g.right[start];
            loop {
                seen[cur] = true;
                let arc = g.arcs[arc_id];
                let seq = &arc.letters[..arc.count as usize];
                let next = if arc.ends[0] == cur {
                    letters.extend_from_slice(seq);
                    arc.ends[1]
                } else {
                    letters.extend(seq.iter().rev());
                    arc.ends[0]
                };
                if next == start {
                    break;
                }
                arc_id = if g.left[next] == arc_id { g.right[next] } else { g.left[next] };
                cur = next;
            }
            // the arc closing up through `start` is the last one
            out.push(CrossingWord::from_letters(letters, !g.above[start]));
        }
        out
    }
}
