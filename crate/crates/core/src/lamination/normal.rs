//! Normalize-then-evaluate intersection numbers.
//!
//! A single curve is pushed to a round curve by half twists that strictly
//! shorten its crossing word (the number of crossings with the real axis),
//! then slid left until it encloses `P_1 ..= P_k`. Draw that curve `C`
//! just left of the chord `beta_k`, closing up along the left part of the
//! disk boundary. It meets `b` in `beta_k(b)` points, and the only bigons
//! come from arcs of `b` left of the chord that wrap around all of `P_1 ..=
//! P_k`: the `r`-th strand from the top and from the bottom, joined by the
//! `r`-th outer loop around `P_1`, for `r < min(A_j, B_j)` over `2 <= j <=
//! k`. Hence
//!
//! ```text
//! i(C, b) = beta_k - 2 min_{2 <= j <= k} min(A_j, B_j)
//! ```

use std::collections::HashMap;

use super::{CrossingWord, CurveCoords, Generator, LaminationError, MCGWord, Result};

/// A word taking a curve to the round curve around `1 ..= split`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NormalForm {
    pub word: MCGWord,
    pub split: usize,
}

impl NormalForm {
    /// Shortest-first search over one to three generators at a time, then a
    /// bounded plateau search; each accepted block strictly shortens the
    /// word, so a curve with `L` crossings needs at most `(L - 2) / 2`
    /// blocks.
    pub fn of(c: &CurveCoords) -> Result<NormalForm> {
        let m = c.surface().disk_punctures();
        let mut w = c.word()?;
        let gens: Vec<Generator> = (1..m as i32).flat_map(|i| [Generator(i), Generator(-i)]).collect();
        let mut letters = Vec::new();
        while w.len() > 2 {
            match descend(&w, &gens).or_else(|| plateau(&w, &gens)) {
                Some((block, next)) => {
                    letters.extend(block);
                    w = next;
                }
                None => return Err(LaminationError::DescentStalled(w.len())),
            }
        }
        let l = w.letters();
        let (mut s, mut t) = (l[0].min(l[1]) as usize, l[0].max(l[1]) as usize);
        let len = t - s;
        while s > 0 {
            letters.extend(slide_left(s, t));
            s -= 1;
            t -= 1;
        }
        Ok(NormalForm { word: MCGWord::new(letters), split: len })
    }

    /// `i(c, b)` for the curve `c` this form was built from.
    pub fn intersect(&self, b: &CurveCoords) -> i64 {
        self.intersect_words(&b.words(), b.surface().disk_punctures())
    }

    /// As [`NormalForm::intersect`], for a multicurve already traced into
    /// component words on `m` disk punctures.
    pub fn intersect_words(&self, words: &[CrossingWord], m: usize) -> i64 {
        let mut counts = super::ArcCounts::zero(m);
        for w in words {
            counts.add(&w.apply_all(&self.word.letters).counts(m));
        }
        let wrapped = (2..=self.split)
            .map(|j| {
                let (a, b) = counts.through(j, m);
                a.min(b)
            })
            .min()
            .unwrap_or(0);
        counts.beta[self.split] - 2 * wrapped
    }
}

// Carry P_s across the block P_{s+1} ..= P_t, so the round curve around
// the block moves one step left.
fn slide_left(s: usize, t: usize) -> Vec<Generator> {
    (s..t).map(|i| Generator(i as i32)).collect()
}

fn descend(w: &CrossingWord, gens: &[Generator]) -> Option<(Vec<Generator>, CrossingWord)> {
    let len = w.len();
    let mut best: Option<(Generator, CrossingWord)> = None;
    for &g in gens {
        let x = w.apply(g);
        if x.len() < len && best.as_ref().is_none_or(|(_, b)| x.len() < b.len()) {
            best = Some((g, x));
        }
    }
    if let Some((g, x)) = best {
        return Some((vec![g], x));
    }
    for &g in gens {
        let x = w.apply(g);
        for &h in gens {
            if h == g.inverse() {
                continue;
            }
            let y = x.apply(h);
            if y.len() < len {
                return Some((vec![g, h], y));
            }
        }
    }
    for &g in gens {
        let x = w.apply(g);
        for &h in gens {
            if h == g.inverse() {
                continue;
            }
            let y = x.apply(h);
            for &k in gens {
                if k == h.inverse() {
                    continue;
                }
                let z = y.apply(k);
                if z.len() < len {
                    return Some((vec![g, h, k], z));
                }
            }
        }
    }
    None
}

// Breadth-first search through words at most two letters longer, for
// the rare curves no short block shortens.
fn plateau(w: &CrossingWord, gens: &[Generator]) -> Option<(Vec<Generator>, CrossingWord)> {
    const STATES: usize = 200_000;
    let len = w.len();
    let mut seen: HashMap<CrossingWord, (usize, Generator)> = HashMap::new();
    let mut order = vec![w.clone()];
    seen.insert(w.clone(), (usize::MAX, Generator(0)));
    let mut head = 0;
    while head < order.len() && order.len() < STATES {
        let cur = order[head].clone();
        for &g in gens {
            let x = cur.apply(g);
            if x.len() > len + 2 || seen.contains_key(&x) {
                continue;
            }
            seen.insert(x.clone(), (head, g));
            if x.len() < len {
                let mut block = vec![g];
                let mut at = head;
                while at != 0 {
                    let (prev, h) = seen[&order[at]];
                    block.push(h);
                    at = prev;
                }
                block.reverse();
                return Some((block, x));
            }
            order.push(x);
        }
        head += 1;
    }
    None
}

/// Geometric intersection number of two curves.
pub fn intersection_number(a: &CurveCoords, b: &CurveCoords) -> Result<i64> {
    if a.surface() != b.surface() {
        return Err(LaminationError::SurfaceMismatch);
    }
    b.word()?;
    Ok(NormalForm::of(a)?.intersect(b))
}
