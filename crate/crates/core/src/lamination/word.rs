//! Curves on the punctured disk as cyclic crossing sequences with the real
//! axis.
//!
//! The disk carries punctures `P_1 .. P_m` on the real axis, which they cut
//! into segments `e_0 .. e_m` (`P_i` sits between `e_{i-1}` and `e_i`; `e_0`
//! and `e_m` run out to the boundary). A closed curve in general position
//! is recorded by the segments it crosses, in order. Between two crossings
//! it runs in the upper or the lower half disk, alternately, and each such
//! arc is determined up to isotopy by its two end segments. Two adjacent
//! equal letters bound a bigon with the axis and cancel, so a cyclically
//! reduced word is in minimal position with every segment.

use std::fmt;

/// Index of a punctured-disk half-twist generator.
///
/// `Generator(i)` with `i > 0` exchanges `P_i` and `P_{i+1}` by a
/// counter-clockwise half turn; `Generator(-i)` is its inverse.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, serde::Serialize, serde::Deserialize)]
pub struct Generator(pub i32);

impl Generator {
    pub fn index(self) -> usize {
        self.0.unsigned_abs() as usize
    }

    pub fn is_positive(self) -> bool {
        self.0 > 0
    }

    pub fn inverse(self) -> Generator {
        Generator(-self.0)
    }
}

/// Cyclic crossing word. The arc from `letters[k]` to `letters[k + 1]` lies
/// in the upper half disk iff `k` is even.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct CrossingWord {
    letters: Vec<u8>,
}

impl fmt::Debug for CrossingWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.letters)
    }
}

impl CrossingWord {
    /// Build from raw letters where the first arc lies in the upper half iff
    /// `upper_first`. The result is cyclically reduced.
    pub fn from_letters(letters: Vec<u8>, upper_first: bool) -> CrossingWord {
        assert!(letters.len().is_multiple_of(2), "closed curves cross the axis an even number of times");
        let mut w = CrossingWord { letters };
        if !upper_first && !w.letters.is_empty() {
            w.letters.rotate_left(1);
        }
        w.reduce();
        w
    }

    /// The round curve around the consecutive punctures `P_lo ..= P_hi`.
    pub fn round(lo: usize, hi: usize) -> CrossingWord {
        assert!(lo >= 1 && lo <= hi);
        CrossingWord { letters: vec![(lo - 1) as u8, hi as u8] }
    }

    pub fn letters(&self) -> &[u8] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    fn reduce(&mut self) {
        let mut out: Vec<u8> = Vec::with_capacity(self.letters.len());
        for &x in &self.letters {
            if out.last() == Some(&x) {
                out.pop();
            } else {
                out.push(x);
            }
        }
        // Cancel around the seam. Each dropped pair shifts the arc parity by
        // one, undone by an odd rotation at the end.
        let mut start = 0;
        let mut end = out.len();
        let mut flips = 0usize;
        while end - start >= 2 && out[start] == out[end - 1] {
            start += 1;
            end -= 1;
            flips += 1;
        }
        let mut core: Vec<u8> = out[start..end].to_vec();
        if flips % 2 == 1 && !core.is_empty() {
            core.rotate_left(1);
        }
        self.letters = canonical(core);
    }

    /// Image under a half twist.
    pub fn apply(&self, g: Generator) -> CrossingWord {
        let i = g.index() as u8;
        let (lo, hi) = (i - 1, i + 1);
        let mut out = Vec::with_capacity(self.letters.len() + 8);
        for (k, &x) in self.letters.iter().enumerate() {
            if x != i {
                out.push(x);
                continue;
            }
            // The crossing at odd k runs from the upper to the lower half.
            let downward = k % 2 == 1;
            if downward == g.is_positive() {
                out.extend_from_slice(&[lo, i, hi]);
            } else {
                out.extend_from_slice(&[hi, i, lo]);
            }
        }
        CrossingWord::from_letters(out, true)
    }

    pub fn apply_all(&self, word: &[Generator]) -> CrossingWord {
        word.iter().fold(self.clone(), |w, &g| w.apply(g))
    }

    /// Arcs as `(from, to, upper)` triples.
    pub fn arcs(&self) -> impl Iterator<Item = (usize, usize, bool)> + '_ {
        let n = self.letters.len();
        (0..n).map(move |k| {
            (self.letters[k] as usize, self.letters[(k + 1) % n] as usize, k % 2 == 0)
        })
    }

    /// Minimal intersection counts with the vertical rays and chords.
    pub fn counts(&self, punctures: usize) -> ArcCounts {
        let m = punctures;
        let mut up = vec![0i64; m + 1];
        let mut down = vec![0i64; m + 1];
        let mut beta = vec![0i64; m + 1];
        for (s, t, upper) in self.arcs() {
            let (lo, hi) = (s.min(t), s.max(t));
            // covers P_j for lo < j <= hi
            for j in lo + 1..=hi {
                if upper {
                    up[j] += 1;
                } else {
                    down[j] += 1;
                }
            }
            for b in beta.iter_mut().take(hi).skip(lo + 1) {
                *b += 1;
            }
        }
        let n = self.letters.len();
        for k in 0..n {
            let x = self.letters[k] as usize;
            let prev = self.letters[(k + n - 1) % n] as usize;
            let next = self.letters[(k + 1) % n] as usize;
            if (prev < x) != (next < x) && x >= 1 && x < m {
                beta[x] += 1;
            }
        }
        ArcCounts { up, down, beta }
    }

    /// Punctures enclosed on the side away from the disk boundary.
    pub fn enclosed(&self, punctures: usize) -> Vec<usize> {
        let c = self.counts(punctures);
        (1..=punctures).filter(|&j| c.up[j] % 2 == 1).collect()
    }
}

// Even rotations and reversal keep the arc parity convention; pick the
// lexicographically least representative.
fn canonical(w: Vec<u8>) -> Vec<u8> {
    let n = w.len();
    if n == 0 {
        return w;
    }
    let rev: Vec<u8> = w.iter().rev().copied().collect();
    let mut best = w.clone();
    for base in [&w, &rev] {
        for r in (0..n).step_by(2) {
            let cand: Vec<u8> = base[r..].iter().chain(&base[..r]).copied().collect();
            if cand < best {
                best = cand;
            }
        }
    }
    best
}

/// Geometric intersection numbers of a curve system with the arcs that
/// define the coordinates: `up[j]`/`down[j]` for the rays from `P_j` to the
/// top/bottom of the disk (`1 <= j <= m`) and `beta[j]` for the vertical
/// chord between `P_j` and `P_{j+1}` (`1 <= j < m`). Index 0 and the
/// unused tail entries are zero.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ArcCounts {
    pub up: Vec<i64>,
    pub down: Vec<i64>,
    pub beta: Vec<i64>,
}

impl ArcCounts {
    pub fn zero(punctures: usize) -> ArcCounts {
        ArcCounts {
            up: vec![0; punctures + 1],
            down: vec![0; punctures + 1],
            beta: vec![0; punctures + 1],
        }
    }

    pub fn add(&mut self, other: &ArcCounts) {
        for (a, b) in self.up.iter_mut().zip(&other.up) {
            *a += b;
        }
        for (a, b) in self.down.iter_mut().zip(&other.down) {
            *a += b;
        }
        for (a, b) in self.beta.iter_mut().zip(&other.beta) {
            *a += b;
        }
    }

    /// Strands passing above (`A`) and below (`B`) puncture `j` without
    /// turning around it. Zero at the end punctures.
    pub fn through(&self, j: usize, punctures: usize) -> (i64, i64) {
        if j <= 1 || j >= punctures {
            return (0, 0);
        }
        let b = (self.beta[j - 1] - self.beta[j]) / 2;
        let l = b.max(0);
        let r = (-b).max(0);
        let ab = self.up[j] + self.down[j] - 2 * (l + r);
        let a = (ab + self.up[j] - self.down[j]) / 2;
        (a, ab - a)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reduction_cancels_bigons() {
        let w = CrossingWord::from_letters(vec![0, 1, 1, 2], true);
        assert_eq!(w.letters(), &[0, 2]);
        let w = CrossingWord::from_letters(vec![1, 0, 2, 1], true);
        // seam cancellation flips parity: [0, 2] with the upper arc 0 -> 2
        assert_eq!(w.len(), 2);
    }

    #[test]
    fn twist_then_inverse_is_identity() {
        let w = CrossingWord::round(2, 3);
        for g in 1..4 {
            let there = w.apply(Generator(g));
            let back = there.apply(Generator(-g));
            assert_eq!(back, w, "generator {g}");
            let back = w.apply(Generator(-g)).apply(Generator(g));
            assert_eq!(back, w, "generator -{g}");
        }
    }

    #[test]
    fn round_curve_fixed_by_its_own_half_twist() {
        let w = CrossingWord::round(1, 2);
        assert_eq!(w.apply(Generator(1)), w);
        assert_eq!(w.apply(Generator(-1)), w);
    }

    #[test]
    fn enclosure() {
        assert_eq!(CrossingWord::round(2, 4).enclosed(5), vec![2, 3, 4]);
        let w = CrossingWord::round(2, 3).apply(Generator(1));
        assert_eq!(w.enclosed(4), vec![1, 3]);
    }
}
