//! Finite towers of presented modules with stabilization certificates.
//!
//! Directed and inverse systems that arise from torsion and completion are
//! never materialised as single modules; instead a finite stretch of levels
//! and transition maps is recorded, eventual kernels/images are computed
//! level by level, and the limit or colimit is reported only when the data
//! visibly stabilizes. For inverse towers the stabilization of eventual
//! images is the Mittag-Leffler condition, which is recorded together with
//! the resulting vanishing of lim^1.

use crate::module::{present_submodule, submodule_eq, ModuleMap, PresentedModule};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Direction {
    Directed,
    Inverse,
}

#[derive(Clone, Debug)]
pub enum TowerSummary {
    /// The eventual images/kernels stabilized on a confirmed prefix of
    /// levels and the induced comparison maps between them are isomorphisms:
    /// the limit (inverse) or colimit (directed) is the reported value. For
    /// inverse towers `lim1_zero` records that Mittag-Leffler forces
    /// lim^1 = 0.
    Stabilized { value: PresentedModule, lim1_zero: Option<bool> },
    /// Inverse towers only: the eventual images stabilized on a confirmed
    /// prefix (so lim^1 = 0), but the stabilized values keep growing -- a
    /// genuine pro-object such as an adic completion. The deepest level is
    /// reported instead of a limit.
    MittagLeffler { confirmed_to: usize, top_level: PresentedModule },
    /// No stabilization evidence within the computed levels.
    NonStabilizing { top_level: PresentedModule },
}

impl TowerSummary {
    pub fn stabilized_value(&self) -> Option<&PresentedModule> {
        match self {
            TowerSummary::Stabilized { value, .. } => Some(value),
            _ => None,
        }
    }

    /// Is lim^1 = 0 certified (inverse towers with Mittag-Leffler evidence)?
    pub fn lim1_zero(&self) -> bool {
        matches!(
            self,
            TowerSummary::Stabilized { lim1_zero: Some(true), .. }
                | TowerSummary::MittagLeffler { .. }
        )
    }

    pub fn describe(&self) -> String {
        match self {
            TowerSummary::Stabilized { value, lim1_zero } => {
                let mut s = format!("stabilized: {}", value.describe());
                if let Some(true) = lim1_zero {
                    s.push_str(" (Mittag-Leffler, lim^1 = 0)");
                }
                s
            }
            TowerSummary::MittagLeffler { confirmed_to, top_level } => format!(
                "non-stabilizing pro-object (Mittag-Leffler confirmed to level {confirmed_to}, \
                 lim^1 = 0); deepest level: {}",
                top_level.describe()
            ),
            TowerSummary::NonStabilizing { top_level } => {
                format!("non-stabilizing; value at deepest level: {}", top_level.describe())
            }
        }
    }
}

/// A finite stretch of a directed or inverse system of modules.
///
/// For `Directed`, `transitions[i] : levels[i] -> levels[i+1]`.
/// For `Inverse`, `transitions[i] : levels[i+1] -> levels[i]`.
#[derive(Clone, Debug)]
pub struct TowerCertificate {
    pub direction: Direction,
    pub levels: Vec<PresentedModule>,
    pub transitions: Vec<ModuleMap>,
    /// Per-level flag: the eventual kernel (directed) or eventual image
    /// (inverse) stabilized within the available levels.
    pub stabilization: Vec<bool>,
    pub summary: TowerSummary,
}

impl TowerCertificate {
    pub fn new(
        direction: Direction,
        levels: Vec<PresentedModule>,
        transitions: Vec<ModuleMap>,
    ) -> TowerCertificate {
        assert!(!levels.is_empty());
        assert_eq!(transitions.len() + 1, levels.len());
        for (i, t) in transitions.iter().enumerate() {
            match direction {
                Direction::Directed => {
                    assert_eq!(t.src.gens, levels[i].gens);
                    assert_eq!(t.dst.gens, levels[i + 1].gens);
                }
                Direction::Inverse => {
                    assert_eq!(t.src.gens, levels[i + 1].gens);
                    assert_eq!(t.dst.gens, levels[i].gens);
                }
            }
        }
        let (stabilization, summary) = match direction {
            Direction::Directed => summarize_directed(&levels, &transitions),
            Direction::Inverse => summarize_inverse(&levels, &transitions),
        };
        TowerCertificate { direction, levels, transitions, stabilization, summary }
    }

    pub fn all_levels_zero(&self) -> bool {
        self.levels.iter().all(|l| l.is_zero_module())
    }

    pub fn describe(&self) -> String {
        let lv: Vec<String> = self.levels.iter().map(|l| l.describe()).collect();
        format!("{:?} tower [{}]; {}", self.direction, lv.join(" | "), self.summary.describe())
    }
}

/// Composite transition from level `i` to level `j > i` (directed sense).
fn composite(transitions: &[ModuleMap], i: usize, j: usize) -> ModuleMap {
    let mut f = transitions[i].clone();
    for t in &transitions[i + 1..j] {
        f = f.compose(t);
    }
    f
}

fn summarize_directed(
    levels: &[PresentedModule],
    transitions: &[ModuleMap],
) -> (Vec<bool>, TowerSummary) {
    let n = levels.len();
    if n == 1 {
        return (vec![true], TowerSummary::Stabilized { value: levels[0].clone(), lim1_zero: None });
    }
    if transitions.iter().all(|t| t.is_iso()) {
        return (
            vec![true; n],
            TowerSummary::Stabilized { value: levels[n - 1].clone(), lim1_zero: None },
        );
    }
    // Eventual kernels: for each level i, ker(levels[i] -> levels[j]) is an
    // increasing chain in j; the flag records a repeat among the available
    // observations.
    let mut flags = vec![false; n];
    let mut eventual_kernel: Vec<Option<ModuleMap>> = vec![None; n];
    for i in 0..n {
        let mut prev: Option<ModuleMap> = None;
        for j in i + 1..n {
            let f = composite(transitions, i, j);
            let (_k, incl) = f.kernel();
            if let Some(p) = &prev {
                if submodule_eq(&incl, p) {
                    flags[i] = true;
                    eventual_kernel[i] = Some(incl);
                    break;
                }
            }
            prev = Some(incl);
        }
    }
    // Confirmed prefix of levels.
    let confirmed = flags.iter().take_while(|&&f| f).count();
    if confirmed == 0 {
        return (flags, TowerSummary::NonStabilizing { top_level: levels[n - 1].clone() });
    }
    // Reduced levels on the confirmed prefix with their induced maps; the
    // colimit is the stable value when those maps are isomorphisms.
    let mut reduced: Vec<PresentedModule> = Vec::new();
    let mut reduced_proj: Vec<ModuleMap> = Vec::new();
    for i in 0..confirmed {
        let incl = eventual_kernel[i].clone().unwrap();
        let (r, proj) = incl.cokernel();
        reduced.push(r);
        reduced_proj.push(proj);
    }
    let mut stable = true;
    for i in 0..confirmed.saturating_sub(1) {
        // reduced[i] -> reduced[i+1]: cokernel presentations keep the ambient
        // generators, so the transition matrix carries over unchanged.
        let induced = ModuleMap::new(
            reduced[i].clone(),
            reduced[i + 1].clone(),
            transitions[i].matrix.mul(&transitions[i].src.domain, &reduced_proj[i + 1].matrix),
        );
        if !induced.is_iso() {
            stable = false;
        }
    }
    if stable {
        (
            flags,
            TowerSummary::Stabilized { value: reduced[confirmed - 1].clone(), lim1_zero: None },
        )
    } else {
        (flags, TowerSummary::NonStabilizing { top_level: levels[n - 1].clone() })
    }
}

fn summarize_inverse(
    levels: &[PresentedModule],
    transitions: &[ModuleMap],
) -> (Vec<bool>, TowerSummary) {
    let n = levels.len();
    if n == 1 {
        return (
            vec![true],
            TowerSummary::Stabilized { value: levels[0].clone(), lim1_zero: Some(true) },
        );
    }
    if transitions.iter().all(|t| t.is_iso()) {
        return (
            vec![true; n],
            TowerSummary::Stabilized { value: levels[n - 1].clone(), lim1_zero: Some(true) },
        );
    }
    // Eventual images: for level i, im(levels[j] -> levels[i]) decreases in
    // j; the flag records a repeat among the available observations.
    let mut flags = vec![false; n];
    let mut eventual: Vec<Option<ModuleMap>> = vec![None; n];
    for i in 0..n {
        let mut prev: Option<ModuleMap> = None;
        for j in i + 1..n {
            // composite levels[j] -> levels[i]
            let mut f = transitions[j - 1].clone();
            for k in (i..j - 1).rev() {
                f = f.compose(&transitions[k]);
            }
            let rows: Vec<Vec<_>> = (0..f.matrix.rows).map(|r| f.matrix.row(r)).collect();
            let (_im, incl) = present_submodule(&levels[i], rows);
            if let Some(p) = &prev {
                if submodule_eq(&incl, p) {
                    flags[i] = true;
                    eventual[i] = Some(incl);
                    break;
                }
            }
            prev = Some(incl);
        }
    }
    let confirmed = flags.iter().take_while(|&&f| f).count();
    if confirmed == 0 {
        return (flags, TowerSummary::NonStabilizing { top_level: levels[n - 1].clone() });
    }
    // On the confirmed prefix: the transitions restrict to maps between
    // eventual images. All isomorphisms: genuine limit. All surjections:
    // Mittag-Leffler pro-object with lim^1 = 0 but growing values.
    let mut all_iso = true;
    let mut all_surj = true;
    for i in 0..confirmed.saturating_sub(1) {
        let restricted = eventual[i + 1].clone().unwrap().compose(&transitions[i]);
        match restricted.lift_through(eventual[i].as_ref().unwrap()) {
            Some(induced) => {
                if !induced.is_iso() {
                    all_iso = false;
                }
                if !induced.is_surjective() {
                    all_surj = false;
                }
            }
            None => {
                all_iso = false;
                all_surj = false;
            }
        }
    }
    if all_iso {
        (
            flags,
            TowerSummary::Stabilized {
                value: eventual[confirmed - 1].clone().unwrap().src,
                lim1_zero: Some(true),
            },
        )
    } else if all_surj {
        (
            flags,
            TowerSummary::MittagLeffler {
                confirmed_to: confirmed - 1,
                top_level: levels[n - 1].clone(),
            },
        )
    } else {
        (flags, TowerSummary::NonStabilizing { top_level: levels[n - 1].clone() })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::module::adic_quotient;
    use crate::ore::matrix::OreMatrix;
    use crate::ore::OreDomain;

    fn mult_map(
        dom: &OreDomain,
        src: &PresentedModule,
        dst: &PresentedModule,
        c: i64,
    ) -> ModuleMap {
        assert_eq!(src.gens, dst.gens);
        let mut m = OreMatrix::new(dom, src.gens, dst.gens);
        for i in 0..src.gens {
            m.set(i, i, dom.from_int(c));
        }
        ModuleMap::new(src.clone(), dst.clone(), m)
    }

    #[test]
    fn constant_tower_is_its_value() {
        let z = OreDomain::integers(2);
        let m = PresentedModule::from_factors(&z, &[4]);
        let levels = vec![m.clone(), m.clone(), m.clone()];
        let transitions = vec![ModuleMap::identity(&m), ModuleMap::identity(&m)];
        let t = TowerCertificate::new(Direction::Inverse, levels, transitions);
        let v = t.summary.stabilized_value().expect("constant tower stabilizes");
        assert!(v.iso_eq(&m));
    }

    #[test]
    fn inverse_mult2_tower_on_z8_has_limit_zero() {
        // Z/8 <-2- Z/8 <-2- ... eventual image = 0, Mittag-Leffler
        let z = OreDomain::integers(2);
        let m = PresentedModule::from_factors(&z, &[8]);
        let levels = vec![m.clone(); 6];
        let transitions: Vec<ModuleMap> = (0..5).map(|_| mult_map(&z, &m, &m, 2)).collect();
        let t = TowerCertificate::new(Direction::Inverse, levels, transitions);
        match &t.summary {
            TowerSummary::Stabilized { value, lim1_zero } => {
                assert!(value.is_zero_module());
                assert_eq!(*lim1_zero, Some(true));
            }
            _ => panic!("expected stabilization: {}", t.describe()),
        }
    }

    #[test]
    fn adic_tower_of_z_does_not_stabilize() {
        let z = OreDomain::integers(2);
        let m = PresentedModule::free(&z, 1);
        let levels: Vec<PresentedModule> = (1..=4).map(|n| adic_quotient(&m, n)).collect();
        let transitions: Vec<ModuleMap> = (0..3)
            .map(|i| {
                ModuleMap::new(levels[i + 1].clone(), levels[i].clone(), OreMatrix::identity(&z, 1))
            })
            .collect();
        let t = TowerCertificate::new(Direction::Inverse, levels.clone(), transitions);
        // the adic pro-object: Mittag-Leffler (lim^1 = 0) but no finite limit
        match &t.summary {
            TowerSummary::MittagLeffler { .. } => {}
            other => panic!("expected Mittag-Leffler pro-object, got {}", other.describe()),
        }
        assert!(t.summary.lim1_zero());
        assert!(t.summary.stabilized_value().is_none());
        // levels are Z/2, Z/4, Z/8, Z/16
        for (n, l) in levels.iter().enumerate() {
            assert!(l.iso_eq(&PresentedModule::from_factors(&z, &[1 << (n + 1)])));
        }
    }

    #[test]
    fn directed_doubling_tower_reports_ind_object() {
        // Z/2 -2-> Z/4 -2-> Z/8: injective transitions, never iso
        let z = OreDomain::integers(2);
        let levels: Vec<PresentedModule> =
            (1..=4).map(|n| PresentedModule::from_factors(&z, &[1 << n])).collect();
        let transitions: Vec<ModuleMap> =
            (0..3).map(|i| mult_map(&z, &levels[i], &levels[i + 1], 2)).collect();
        let t = TowerCertificate::new(Direction::Directed, levels, transitions);
        assert!(matches!(t.summary, TowerSummary::NonStabilizing { .. }));
    }

    #[test]
    fn directed_mult2_tower_on_z4_collapses_to_zero() {
        // Z/4 -2-> Z/4 -2-> ... colimit is 0 (every element eventually dies)
        let z = OreDomain::integers(2);
        let m = PresentedModule::from_factors(&z, &[4]);
        let levels = vec![m.clone(); 6];
        let transitions: Vec<ModuleMap> = (0..5).map(|_| mult_map(&z, &m, &m, 2)).collect();
        let t = TowerCertificate::new(Direction::Directed, levels, transitions);
        match &t.summary {
            TowerSummary::Stabilized { value, .. } => assert!(value.is_zero_module()),
            _ => panic!("expected collapse: {}", t.describe()),
        }
    }
}
