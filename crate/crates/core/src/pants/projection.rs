//! Projections to the windows of a standard multicurve.
//!
//! Let `Y` be a window and `β` a curve. An arc of `β ∩ Y` with slope `σ`
//! meets the window curve `γ_s` in `w |det(σ, s)|` points, `w` being one for
//! a seam and two for a wave. So
//!
//! ```text
//! i(β, γ_s) = Σ_j w_j |det(σ_j, s)|
//! ```
//!
//! and `t ↦ i(β, γ_{t/1})` is convex and piecewise linear with a kink of
//! size `2 w_j q_j` at each arc slope `p_j / q_j`. The weights satisfy
//! `Σ w_j q_j = i(β, γ_{1/0})`, so every kink has denominator at most that.
//! A curve inside `Y` reads as weight two at its own slope, and a curve
//! missing `Y` as nothing.

use std::collections::{BTreeMap, HashMap};

use num_rational::Rational64;

use super::{CurveCatalog, MulticurveQ, PantsError, PantsVertex, Result};
use crate::farey::{self, Slope, INFINITY, ZERO};
use crate::lamination::{CrossingWord, CurveCoords, NormalForm};

/// Arc slopes with multiplicities for one window.
pub type ArcSlopes = Vec<(Slope, i64)>;

pub struct Projector<'a> {
    pub q: &'a MulticurveQ,
    catalog: Option<&'a CurveCatalog>,
    window_curves: HashMap<(usize, Slope), Vec<CrossingWord>>,
    projections: HashMap<(usize, CurveCoords), ArcSlopes>,
    distances: HashMap<(Slope, Slope), u32>,
}

fn bug(msg: String) -> PantsError {
    PantsError::NotPants(format!("projection inconsistency: {msg}"))
}

impl<'a> Projector<'a> {
    pub fn new(q: &'a MulticurveQ, catalog: Option<&'a CurveCatalog>) -> Projector<'a> {
        Projector { q, catalog, window_curves: HashMap::new(), projections: HashMap::new(), distances: HashMap::new() }
    }

    fn meet(&mut self, win: usize, beta: &NormalForm, s: Slope) -> Result<i64> {
        let m = self.q.surface.disk_punctures();
        let words = match self.window_curves.get(&(win, s)) {
            Some(w) => w,
            None => {
                let c = self.q.windows[win].curve(s)?;
                self.window_curves.entry((win, s)).or_insert(c.words())
            }
        };
        Ok(beta.intersect_words(words, m))
    }

    /// Arc slopes of `β ∩ Y_win`, from the kinks of `i(β, γ_s)`.
    pub fn arcs(&mut self, win: usize, beta: &NormalForm) -> Result<ArcSlopes> {
        let d = self.meet(win, beta, INFINITY)?;
        let p = self.meet(win, beta, ZERO)?;
        if d == 0 {
            return Ok(if p == 0 { Vec::new() } else { vec![(INFINITY, p)] });
        }
        let mut g: BTreeMap<Rational64, Rational64> = BTreeMap::new();
        for k in -p - 1..=p + 1 {
            g.insert(Rational64::from_integer(k), Rational64::from_integer(self.meet(win, beta, Slope::new(k, 1).unwrap())?));
        }
        for k in -p - 1..=p {
            self.refine(win, beta, (k, 1), (k + 1, 1), d, &mut g)?;
        }
        let pts: Vec<(Rational64, Rational64)> = g.into_iter().collect();
        let slope = |k: usize| (pts[k + 1].1 - pts[k].1) / (pts[k + 1].0 - pts[k].0);
        let mut out: ArcSlopes = Vec::new();
        for k in 1..pts.len() - 1 {
            let jump = slope(k) - slope(k - 1);
            if jump == Rational64::from_integer(0) {
                continue;
            }
            let t = pts[k].0;
            let count = jump / Rational64::from_integer(2 * t.denom());
            if !count.is_integer() || count < Rational64::from_integer(0) {
                return Err(bug(format!("kink {jump} at {t}")));
            }
            out.push((Slope::new(*t.numer(), *t.denom()).expect("reduced"), count.to_integer()));
        }
        // the constant part counts arcs of slope 1/0; t0 is leftmost
        let t0 = pts[0].0;
        let mut rest = pts[0].1;
        for (s, w) in &out {
            let ts = Rational64::new(s.p(), s.q());
            rest -= Rational64::from_integer(w * s.q()) * (ts - t0);
        }
        if !rest.is_integer() || rest < Rational64::from_integer(0) {
            return Err(bug(format!("offset {rest}")));
        }
        if rest.to_integer() > 0 {
            out.push((INFINITY, rest.to_integer()));
        }
        let sq: i64 = out.iter().map(|(s, w)| w * s.q()).sum();
        let sp: i64 = out.iter().map(|(s, w)| w * s.p().abs()).sum();
        if sq != d || sp != p {
            return Err(bug(format!("weights {out:?} against {d}, {p}")));
        }
        out.sort();
        Ok(out)
    }

    // A convex function agreeing with its chord at an interior point is
    // linear on the interval, and the mediant has the least denominator
    // inside, so no kink hides once the mediant denominator passes `d`.
    fn refine(
        &mut self,
        win: usize,
        beta: &NormalForm,
        (a, b): (i64, i64),
        (c, e): (i64, i64),
        d: i64,
        g: &mut BTreeMap<Rational64, Rational64>,
    ) -> Result<()> {
        if b + e > d {
            return Ok(());
        }
        let (l, r, m) = (Rational64::new(a, b), Rational64::new(c, e), Rational64::new(a + c, b + e));
        let gm = Rational64::new(self.meet(win, beta, Slope::new(a + c, b + e).unwrap())?, b + e);
        g.insert(m, gm);
        let chord = g[&l] + (g[&r] - g[&l]) * (m - l) / (r - l);
        if gm != chord {
            self.refine(win, beta, (a, b), (a + c, b + e), d, g)?;
            self.refine(win, beta, (a + c, b + e), (c, e), d, g)?;
        }
        Ok(())
    }

    fn form_of(&self, c: &CurveCoords) -> Result<NormalForm> {
        if let Some(cat) = self.catalog {
            if let Some(id) = cat.id(c) {
                return Ok(cat.form(id).clone());
            }
        }
        Ok(NormalForm::of(c)?)
    }

    /// `π_{Y_win}(c)` with arc multiplicities.
    pub fn project_curve(&mut self, win: usize, c: &CurveCoords) -> Result<ArcSlopes> {
        if let Some(p) = self.projections.get(&(win, c.clone())) {
            return Ok(p.clone());
        }
        let form = self.form_of(c)?;
        let arcs = self.arcs(win, &form)?;
        self.projections.insert((win, c.clone()), arcs.clone());
        Ok(arcs)
    }

    /// `π_{Y_win}(ν)` as a set of slopes.
    pub fn project(&mut self, win: usize, v: &PantsVertex) -> Result<Vec<Slope>> {
        let mut out = Vec::new();
        for c in &v.curves {
            out.extend(self.project_curve(win, c)?.into_iter().map(|(s, _)| s));
        }
        out.sort();
        out.dedup();
        Ok(out)
    }

    pub fn farey(&mut self, a: Slope, b: Slope) -> u32 {
        let key = if a <= b { (a, b) } else { (b, a) };
        *self.distances.entry(key).or_insert_with(|| farey::distance(a, b))
    }

    /// Max over `π(u)` of the min over `π(v)`, summed over the windows.
    pub fn distance(&mut self, u: &PantsVertex, v: &PantsVertex) -> Result<u32> {
        let mut total = 0;
        for win in 0..self.q.windows.len() {
            let (a, b) = (self.project(win, u)?, self.project(win, v)?);
            if a.is_empty() || b.is_empty() {
                return Err(PantsError::EmptyProjection);
            }
            let mut worst = 0;
            for &x in &a {
                let best = b.iter().map(|&y| self.farey(x, y)).min().unwrap();
                worst = worst.max(best);
            }
            total += worst;
        }
        Ok(total)
    }
}

/// Sum of Farey distances between the window slopes of `u` and `v`.
pub fn dq_distance(u: &PantsVertex, v: &PantsVertex, q: &MulticurveQ) -> Result<u32> {
    if !u.contains_all(q) || !v.contains_all(q) {
        return Err(PantsError::QNotContained);
    }
    let slope_in = |x: &PantsVertex, win: usize| -> Result<Slope> {
        let w = &q.windows[win];
        for c in x.curves.iter().filter(|c| !q.curves.contains(c)) {
            if w.contains(c)? {
                return Ok(w.slope(c)?);
            }
        }
        Err(PantsError::NotPants("no curve in a window of Q".into()))
    };
    let mut total = 0;
    for win in 0..q.windows.len() {
        total += farey::distance(slope_in(u, win)?, slope_in(v, win)?);
    }
    Ok(total)
}

/// `d_Y(u, v)` for the complementary subsurface of a standard `Q`.
pub fn subsurface_distance(u: &PantsVertex, v: &PantsVertex, q: &MulticurveQ) -> Result<u32> {
    Projector::new(q, None).distance(u, v)
}
