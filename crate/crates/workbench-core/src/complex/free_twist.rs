//! Complexes of free left modules whose basis vectors carry a right-action
//! twist: the basis vector `e` with twist exponent `t` satisfies
//! `e * b = phi^t(b) * e`. The telescope complexes are the motivating
//! instances. Tensoring with or mapping into a module then lands back in
//! presented modules, with each basis vector contributing a twisted copy.
//!
//! Bookkeeping: the twisted copy attached to a basis vector of twist `t` is
//! realised as `twist_module(m, -t)` for tensor and `twist_module(m, t)` for
//! hom, in coordinates transported through the twist so that all induced
//! differentials become honest right-multiplication matrices. This requires
//! every differential entry `g` from twist `t_src` to twist `t_dst` to
//! satisfy `g * phi^{t_dst - t_src}(b) = b * g` and `phi(g) = g`, which is
//! checked on a sample of ring elements at construction time.

use super::{BoundedComplex, ChainMap, OreComplex, OreUniverse};
use crate::module::{twist_module, ModuleMap, PresentedModule};
use crate::ore::matrix::OreMatrix;
use crate::ore::{OreDomain, OreElement};

#[derive(Clone)]
pub struct FreeTwistComplex {
    pub domain: OreDomain,
    pub lo: i64,
    /// Per degree: the twist exponent of each basis vector.
    pub twists: Vec<Vec<i64>>,
    /// `diffs[k]`: the differential matrix (left coefficients on basis rows).
    pub diffs: Vec<OreMatrix>,
}

fn sample_elements(dom: &OreDomain) -> Vec<OreElement> {
    match dom.base() {
        OreDomain::Integers { .. } => vec![dom.from_int(2), dom.from_int(3), dom.from_int(-5)],
        OreDomain::SkewPoly { field, .. } => {
            let mut out = vec![dom.s()];
            for c in crate::field::Fq::all(field).into_iter().take(8) {
                if !c.is_zero() {
                    out.push(OreElement::Poly(vec![c]));
                }
            }
            out.push(dom.add(&dom.s(), &dom.one()));
            out
        }
        OreDomain::Localized { .. } => unreachable!(),
    }
}

impl FreeTwistComplex {
    pub fn new(
        domain: OreDomain,
        lo: i64,
        twists: Vec<Vec<i64>>,
        diffs: Vec<OreMatrix>,
    ) -> FreeTwistComplex {
        assert_eq!(diffs.len() + 1, twists.len());
        let samples = sample_elements(&domain);
        for (k, d) in diffs.iter().enumerate() {
            assert_eq!(d.rows, twists[k].len());
            assert_eq!(d.cols, twists[k + 1].len());
            for i in 0..d.rows {
                for j in 0..d.cols {
                    let g = d.at(i, j);
                    if domain.is_zero(g) {
                        continue;
                    }
                    let k_twist = twists[k + 1][j] - twists[k][i];
                    assert!(
                        domain.eq(&domain.twist_phi(g, 1), g),
                        "differential entries must be fixed by the twist"
                    );
                    for a in &samples {
                        let lhs = domain.mul(g, &domain.twist_phi(a, k_twist));
                        let rhs = domain.mul(a, g);
                        assert!(
                            domain.eq(&lhs, &rhs),
                            "entry is not a bimodule map for the declared twists"
                        );
                    }
                }
            }
        }
        for k in 0..diffs.len().saturating_sub(1) {
            let dd = diffs[k].mul(&domain, &diffs[k + 1]);
            assert!(dd.is_zero(&domain), "d^2 != 0 in free twist complex");
        }
        FreeTwistComplex { domain, lo, twists, diffs }
    }

    /// The underlying complex of free left modules (twists forgotten).
    pub fn as_free_complex(&self, u: &OreUniverse) -> OreComplex {
        let terms: Vec<PresentedModule> = self
            .twists
            .iter()
            .map(|t| PresentedModule::free(&self.domain, t.len()))
            .collect();
        let diffs: Vec<ModuleMap> = self
            .diffs
            .iter()
            .enumerate()
            .map(|(k, d)| ModuleMap::new(terms[k].clone(), terms[k + 1].clone(), d.clone()))
            .collect();
        BoundedComplex::new(u, self.lo, terms, diffs)
    }

    /// Tensor with a presented module: each basis vector of twist `t`
    /// contributes `twist_module(m, -t)`, and differentials act by right
    /// multiplication with the same entries.
    pub fn tensor(&self, u: &OreUniverse, m: &PresentedModule) -> OreComplex {
        let dom = &self.domain;
        assert_eq!(*dom, m.domain);
        let terms: Vec<PresentedModule> = self
            .twists
            .iter()
            .map(|ts| block_module(dom, m, ts, -1))
            .collect();
        let mut diffs = Vec::new();
        for (k, d) in self.diffs.iter().enumerate() {
            let mat = block_matrix(dom, d, m.gens);
            diffs.push(ModuleMap::new(terms[k].clone(), terms[k + 1].clone(), mat));
        }
        BoundedComplex::new(u, self.lo, terms, diffs)
    }

    /// The hom complex into a presented module: the component at degree `-d`
    /// of the source contributes in degree `d` a product of twisted copies
    /// `twist_module(m, t)`, with the transposed differential matrices.
    pub fn hom(&self, u: &OreUniverse, m: &PresentedModule) -> OreComplex {
        let dom = &self.domain;
        assert_eq!(*dom, m.domain);
        let n_terms = self.twists.len();
        // source degree lo + k maps to hom degree -(lo + k)
        let mut terms: Vec<PresentedModule> = Vec::with_capacity(n_terms);
        for k in (0..n_terms).rev() {
            terms.push(block_module(dom, m, &self.twists[k], 1));
        }
        let hom_lo = -(self.lo + n_terms as i64 - 1);
        let mut diffs = Vec::new();
        for idx in 0..n_terms.saturating_sub(1) {
            // hom degree hom_lo + idx: source components from C-degree
            // hi - idx, target components from C-degree hi - idx - 1.
            let c_deg_index = n_terms - 1 - idx;
            let free_diff = &self.diffs[c_deg_index - 1];
            let n = hom_lo + idx as i64;
            let sign_pos = (n + 1).rem_euclid(2) == 0;
            let mut mat = OreMatrix::new(
                dom,
                self.twists[c_deg_index].len() * m.gens,
                self.twists[c_deg_index - 1].len() * m.gens,
            );
            for i in 0..free_diff.rows {
                for j in 0..free_diff.cols {
                    let g = free_diff.at(i, j);
                    if dom.is_zero(g) {
                        continue;
                    }
                    let e = if sign_pos { g.clone() } else { dom.neg(g) };
                    for c in 0..m.gens {
                        mat.set(j * m.gens + c, i * m.gens + c, e.clone());
                    }
                }
            }
            diffs.push(ModuleMap::new(terms[idx].clone(), terms[idx + 1].clone(), mat));
        }
        BoundedComplex::new(u, hom_lo, terms, diffs)
    }
}

/// Direct sum of `twist_module(m, dir*t)` over the listed twists.
fn block_module(dom: &OreDomain, m: &PresentedModule, twists: &[i64], dir: i64) -> PresentedModule {
    let gens = twists.len() * m.gens;
    let mut rel_rows = Vec::new();
    for (b, &t) in twists.iter().enumerate() {
        let tw = twist_module(m, dir * t);
        for i in 0..tw.relations.rows {
            let mut row = vec![dom.zero(); gens];
            for j in 0..m.gens {
                row[b * m.gens + j] = tw.relations.at(i, j).clone();
            }
            rel_rows.push(row);
        }
    }
    let rel = if rel_rows.is_empty() {
        OreMatrix::new(dom, 0, gens)
    } else {
        OreMatrix::from_rows(rel_rows)
    };
    PresentedModule::new(dom.clone(), gens, rel)
}

/// Expand a free differential matrix to blocks acting coordinatewise by
/// right multiplication.
fn block_matrix(dom: &OreDomain, d: &OreMatrix, gens: usize) -> OreMatrix {
    let mut mat = OreMatrix::new(dom, d.rows * gens, d.cols * gens);
    for i in 0..d.rows {
        for j in 0..d.cols {
            let g = d.at(i, j);
            if dom.is_zero(g) {
                continue;
            }
            for c in 0..gens {
                mat.set(i * gens + c, j * gens + c, g.clone());
            }
        }
    }
    mat
}

/// `Tel'_n`: degree 0 basis `e_0..e_n`, degree 1 basis `e_0..e_{n+1}`,
/// differential `e_i -> e_i - s e_{i+1}`; `e_i` carries twist `i`.
pub fn telescope_prime(domain: &OreDomain, n: usize) -> FreeTwistComplex {
    let t0: Vec<i64> = (0..=n as i64).collect();
    let t1: Vec<i64> = (0..=n as i64 + 1).collect();
    let mut d = OreMatrix::new(domain, n + 1, n + 2);
    let s = domain.s();
    for i in 0..=n {
        d.set(i, i, domain.one());
        d.set(i, i + 1, domain.neg(&s));
    }
    FreeTwistComplex::new(domain.clone(), 0, vec![t0, t1], vec![d])
}

/// `Tel_n`, the cone of `1 -> e_0`: degree 0 basis `e_{-1}, e_0..e_n`
/// (twists `0, 0..n`), degree 1 basis `e_0..e_{n+1}`, differential
/// `e_{-1} -> e_0`, `e_i -> e_i - s e_{i+1}`.
pub fn telescope(domain: &OreDomain, n: usize) -> FreeTwistComplex {
    let mut t0: Vec<i64> = vec![0];
    t0.extend(0..=n as i64);
    let t1: Vec<i64> = (0..=n as i64 + 1).collect();
    let mut d = OreMatrix::new(domain, n + 2, n + 2);
    let s = domain.s();
    d.set(0, 0, domain.one());
    for i in 0..=n {
        d.set(i + 1, i, domain.one());
        d.set(i + 1, i + 1, domain.neg(&s));
    }
    FreeTwistComplex::new(domain.clone(), 0, vec![t0, t1], vec![d])
}

/// The chain map `theta_n : A[-1] -> Tel'_n` sending 1 to `e_0` in degree 1.
pub fn theta_map(u: &OreUniverse, n: usize) -> ChainMap<OreUniverse> {
    let dom = &u.domain;
    let a_free = PresentedModule::free(dom, 1);
    let src = BoundedComplex::single(u, 1, a_free.clone());
    let telp = telescope_prime(dom, n);
    let dst = telp.as_free_complex(u);
    let mut m1 = OreMatrix::new(dom, 1, n + 2);
    m1.set(0, 0, dom.one());
    let deg0 = ModuleMap::zero(&PresentedModule::zero(dom), &dst.terms[0]);
    let deg1 = ModuleMap::new(a_free, dst.terms[1].clone(), m1);
    ChainMap::new(u, src, dst, 0, vec![deg0, deg1])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex::mapping_cone;
    use crate::field::FqCtx;
    use crate::module::adic_quotient;

    #[test]
    fn telescope_prime_has_h0_zero_h1_free_rank_one() {
        for dom in [OreDomain::integers(2), OreDomain::skew(FqCtx::f4(), 1)] {
            let u = OreUniverse::new(dom.clone());
            for n in 0..=6 {
                let telp = telescope_prime(&dom, n).as_free_complex(&u);
                let h0 = telp.homology(&u, 0);
                assert!(h0.h.is_zero_module(), "H^0(Tel'_{n}) != 0");
                let h1 = telp.homology(&u, 1);
                assert_eq!(h1.h.free_rank(), 1);
                assert!(h1.h.invariants().is_empty());
            }
        }
    }

    #[test]
    fn telescope_agrees_with_cone_of_theta() {
        let dom = OreDomain::integers(2);
        let u = OreUniverse::new(dom.clone());
        for n in 0..=3 {
            let tel = telescope(&dom, n).as_free_complex(&u);
            let theta = theta_map(&u, n);
            let (cone, _, _) = mapping_cone(&u, &theta);
            for d in 0..=1 {
                let a = tel.homology(&u, d).h;
                let b = cone.homology(&u, d).h;
                assert!(a.iso_eq(&b), "telescope vs cone homology at degree {d}");
            }
        }
    }

    #[test]
    fn telescope_h1_is_cyclic_s_power() {
        // H^1(Tel_n) = A/A s^{n+1}
        for dom in [OreDomain::integers(2), OreDomain::skew(FqCtx::f4(), 1)] {
            let u = OreUniverse::new(dom.clone());
            for n in 0..=3 {
                let tel = telescope(&dom, n).as_free_complex(&u);
                assert!(tel.homology(&u, 0).h.is_zero_module());
                let h1 = tel.homology(&u, 1).h;
                let expected = PresentedModule::cyclic(&dom, dom.s_pow(n as u32 + 1));
                assert!(h1.iso_eq(&expected), "n={n}: {} vs {}", h1.describe(), expected.describe());
            }
        }
    }

    #[test]
    fn tensor_with_module_matches_two_term_model() {
        // H^i(Tel_n tensor M) = H^i(M --s^{n+1}--> M)
        let dom = OreDomain::integers(2);
        let u = OreUniverse::new(dom.clone());
        let m = PresentedModule::from_factors(&dom, &[12]);
        for n in 0..=3 {
            let t = telescope(&dom, n).tensor(&u, &m);
            let h0 = t.homology(&u, 0).h;
            let h1 = t.homology(&u, 1).h;
            // ker and coker of s^{n+1} on Z/12
            let (k, _) = crate::module::s_power_kernel(&m, n as u32 + 1);
            let q = adic_quotient(&m, n as u32 + 1);
            assert!(h0.iso_eq(&k), "n={n}: H0 {} vs {}", h0.describe(), k.describe());
            assert!(h1.iso_eq(&q), "n={n}: H1 {} vs {}", h1.describe(), q.describe());
        }
    }

    #[test]
    fn tensor_over_skew_ring_with_torsion_module() {
        let dom = OreDomain::skew(FqCtx::f4(), 1);
        let u = OreUniverse::new(dom.clone());
        let m = PresentedModule::cyclic(&dom, dom.s_pow(2)); // A/Ax^2
        let n = 1usize; // s^{n+1} = x^2 kills m
        let t = telescope(&dom, n).tensor(&u, &m);
        let h0 = t.homology(&u, 0).h;
        let h1 = t.homology(&u, 1).h;
        assert!(h0.iso_eq(&m));
        assert!(h1.iso_eq(&m));
    }

    #[test]
    fn hom_into_free_gives_adic_quotient() {
        // Hom(Tel_n, Z): H^-1 = 0, H^0 = Z/2^{n+1}
        let dom = OreDomain::integers(2);
        let u = OreUniverse::new(dom.clone());
        let zfree = PresentedModule::free(&dom, 1);
        for n in 0..=3 {
            let h = telescope(&dom, n).hom(&u, &zfree);
            assert_eq!(h.lo, -1);
            assert!(h.homology(&u, -1).h.is_zero_module());
            let h0 = h.homology(&u, 0).h;
            let expected = PresentedModule::cyclic(&dom, dom.s_pow(n as u32 + 1));
            assert!(h0.iso_eq(&expected), "n={n}: {}", h0.describe());
        }
    }

    #[test]
    fn hom_into_torsion_over_skew() {
        // Hom(Tel_n, A/Ax^2) over F_4[x;sigma]: H^0 = A/Ax^2 for n >= 1
        let dom = OreDomain::skew(FqCtx::f4(), 1);
        let u = OreUniverse::new(dom.clone());
        let m = PresentedModule::cyclic(&dom, dom.s_pow(2));
        for n in 1..=3 {
            let h = telescope(&dom, n).hom(&u, &m);
            let h0 = h.homology(&u, 0).h;
            assert!(h0.iso_eq(&m), "n={n}: {}", h0.describe());
        }
    }
}
