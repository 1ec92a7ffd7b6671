//! Brute-force minimal-position intersection for small curves.
//!
//! Both curves are drawn tight with respect to the real axis: every arc
//! between two crossings is a chord of the upper or lower half disk. Two
//! chords of a half disk cross iff their endpoints interleave along the
//! axis, so the drawing is fixed by the order of the crossing points on
//! each segment. Some drawing in which both curves stay tight realizes the
//! geometric intersection number; the oracle tries every order that keeps
//! each curve embedded and takes the least count.

use super::CrossingWord;

struct Chord {
    ends: [usize; 2],
    upper: bool,
    owner: u8,
}

/// `None` when the search space exceeds `budget` drawings.
pub fn brute_intersection(a: &CrossingWord, b: &CrossingWord, punctures: usize, budget: u64) -> Option<i64> {
    let mut points: Vec<(u8, usize)> = Vec::new(); // (owner, segment)
    let mut chords = Vec::new();
    for (owner, w) in [a, b].into_iter().enumerate() {
        let base = points.len();
        let l = w.letters();
        for &x in l {
            points.push((owner as u8, x as usize));
        }
        for k in 0..l.len() {
            chords.push(Chord { ends: [base + k, base + (k + 1) % l.len()], upper: k % 2 == 0, owner: owner as u8 });
        }
    }
    let mut by_segment: Vec<Vec<usize>> = vec![Vec::new(); punctures + 1];
    for (i, &(_, s)) in points.iter().enumerate() {
        by_segment[s].push(i);
    }
    let mut space = 1u64;
    for seg in &by_segment {
        for k in 1..=seg.len() as u64 {
            space = space.saturating_mul(k);
        }
    }
    if space > budget {
        return None;
    }
    let perms: Vec<Vec<Vec<usize>>> = by_segment.iter().map(|s| permutations(s)).collect();
    let mut pos = vec![0usize; points.len()];
    let mut best = i64::MAX;
    let mut choice = vec![0usize; perms.len()];
    loop {
        let mut rank = 0;
        for (s, p) in perms.iter().enumerate() {
            for &pt in &p[choice[s]] {
                pos[pt] = rank;
                rank += 1;
            }
        }
        if let Some(x) = count(&chords, &pos) {
            best = best.min(x);
        }
        // odometer
        let mut s = 0;
        loop {
            if s == perms.len() {
                return Some(best);
            }
            choice[s] += 1;
            if choice[s] < perms[s].len() {
                break;
            }
            choice[s] = 0;
            s += 1;
        }
    }
}

fn count(chords: &[Chord], pos: &[usize]) -> Option<i64> {
    let mut cross = 0;
    for (i, c) in chords.iter().enumerate() {
        let (x0, x1) = order(pos[c.ends[0]], pos[c.ends[1]]);
        for d in &chords[i + 1..] {
            if d.upper != c.upper {
                continue;
            }
            let (y0, y1) = order(pos[d.ends[0]], pos[d.ends[1]]);
            let inside = |y: usize| x0 < y && y < x1;
            if inside(y0) != inside(y1) && ![y0, y1].contains(&x0) && ![y0, y1].contains(&x1) {
                if c.owner == d.owner {
                    return None;
                }
                cross += 1;
            }
        }
    }
    Some(cross)
}

fn order(a: usize, b: usize) -> (usize, usize) {
    (a.min(b), a.max(b))
}

fn permutations(items: &[usize]) -> Vec<Vec<usize>> {
    if items.is_empty() {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for i in 0..items.len() {
        let mut rest = items.to_vec();
        let x = rest.remove(i);
        for mut p in permutations(&rest) {
            p.insert(0, x);
            out.push(p);
        }
    }
    out
}
