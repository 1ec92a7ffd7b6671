//! Disjointness of arc classes as a finite rule table.
//!
//! Whether two arcs can be made disjoint depends only on a small pattern:
//! the kinds of the two arcs, `|det|` of their slopes capped at 3, how many
//! corners their underlying seams share, and which of the wave corners
//! coincide. The table is generated from the drawn-representative oracle,
//! frozen in `data/window_rules.txt`, and loaded at runtime.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::sync::OnceLock;

use super::{enumerate_arcs, oracle, partner, ArcClass, WindowArc, WindowKind};

pub const RULES_VERSION: u32 = 1;
const FROZEN: &str = include_str!("../../data/window_rules.txt");

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
struct Core {
    base: u8,
    far: u8,
    wave: bool,
}

fn core(a: &WindowArc) -> Core {
    match a.class {
        ArcClass::Seam { endpoints, .. } => Core { base: endpoints[0], far: endpoints[1], wave: false },
        ArcClass::Wave { base, companion_slope } => {
            Core { base, far: partner(base, companion_slope), wave: true }
        }
    }
}

/// The pattern key of an unordered pair.
pub fn pattern(a: &WindowArc, b: &WindowArc) -> String {
    let det = a.slope().det(b.slope()).abs().min(3);
    if a.window == WindowKind::OncePuncturedTorus {
        return format!("TT d={}", det.min(2));
    }
    let (x, y) = (core(a), core(b));
    let (x, y) = match (x.wave, y.wave) {
        (true, false) => (y, x),
        (true, true) if (y.base, y.far) < (x.base, x.far) => (y, x),
        _ => (x, y),
    };
    let xs = [x.base, x.far];
    let ys = [y.base, y.far];
    let shared = xs.iter().filter(|c| ys.contains(c)).count();
    let same = u8::from(a.slope() == b.slope() && shared == 2);
    match (x.wave, y.wave) {
        (false, false) => format!("SS d={det} k={shared} same={same}"),
        (false, true) => format!(
            "SW d={det} k={shared} same={same} far_on_seam={} base_on_seam={}",
            u8::from(xs.contains(&y.far)),
            u8::from(xs.contains(&y.base)),
        ),
        _ => {
            // relations between (base, far) of the two waves, symmetrised
            let e = |p: bool| u8::from(p);
            let cross = e(y.base == x.far) + e(x.base == y.far);
            format!(
                "WW d={det} k={shared} same={same} base_at_far={cross} same_far={} same_base={}",
                e(x.far == y.far),
                e(x.base == y.base),
            )
        }
    }
}

#[derive(Debug, Default)]
pub struct RuleTable {
    rules: BTreeMap<String, bool>,
}

impl RuleTable {
    pub fn parse(text: &str) -> RuleTable {
        let mut rules = BTreeMap::new();
        let mut version = None;
        for line in text.lines() {
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            if let Some(v) = line.strip_prefix("version ") {
                version = v.parse::<u32>().ok();
                continue;
            }
            let (key, val) = line.split_once(" -> ").expect("rule line has an arrow");
            rules.insert(key.to_string(), val == "disjoint");
        }
        assert_eq!(version, Some(RULES_VERSION), "rule table version");
        RuleTable { rules }
    }

    pub fn get(&self, key: &str) -> Option<bool> {
        self.rules.get(key).copied()
    }

    pub fn len(&self) -> usize {
        self.rules.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rules.is_empty()
    }

    pub fn render(&self) -> String {
        let mut s = String::new();
        writeln!(s, "# arc disjointness by pattern; regenerate with RuleTable::generate").unwrap();
        writeln!(s, "version {RULES_VERSION}").unwrap();
        for (k, v) in &self.rules {
            writeln!(s, "{k} -> {}", if *v { "disjoint" } else { "meet" }).unwrap();
        }
        s
    }

    /// Run the oracle over every pair of arcs with slopes of height at most
    /// `bound`. Panics if two pairs with one pattern disagree.
    pub fn generate(bound: i64) -> RuleTable {
        let mut rules: BTreeMap<String, bool> = BTreeMap::new();
        for window in [WindowKind::OncePuncturedTorus, WindowKind::FourPuncturedSphere] {
            let arcs = enumerate_arcs(window, bound).expect("positive bound");
            for (i, a) in arcs.iter().enumerate() {
                for b in &arcs[i..] {
                    let disjoint = oracle::drawn_crossings(a, b) == 0;
                    let key = pattern(a, b);
                    if let Some(&old) = rules.get(&key) {
                        assert_eq!(old, disjoint, "pattern {key} is not decisive: {a:?} {b:?}");
                    } else {
                        rules.insert(key, disjoint);
                    }
                }
            }
        }
        RuleTable { rules }
    }
}

pub fn table() -> &'static RuleTable {
    static T: OnceLock<RuleTable> = OnceLock::new();
    T.get_or_init(|| RuleTable::parse(FROZEN))
}
