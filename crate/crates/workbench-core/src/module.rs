//! Finitely presented left modules over an [`OreDomain`].
//!
//! A module is `A^g / rowspan(R)` for a relation matrix `R` with `g` columns;
//! module maps act on row vectors by right matrix multiplication. Kernels,
//! memberships, and lifts all reduce to the diagonal normal form of a stacked
//! matrix, which keeps every computation exact over both the integers and
//! skew polynomial rings.
//!
//! Modules over localized domains are carried as objects (with invariant
//! factors computed by clearing denominators); kernel and solving primitives
//! are only offered over base rings, which is all the torsion, completion,
//! and telescope machinery ever needs.

use crate::ore::diagonal::{diagonal_normal_form, DiagonalForm};
use crate::ore::matrix::{apply_row, OreMatrix};
use crate::ore::{OreDomain, OreElement, Side};

/// Try to solve `x * m = b` over the domain (no quotient).
pub fn solve_row(dom: &OreDomain, m: &OreMatrix, b: &[OreElement]) -> Option<Vec<OreElement>> {
    assert_eq!(b.len(), m.cols);
    if m.rows == 0 {
        return if b.iter().all(|e| dom.is_zero(e)) { Some(Vec::new()) } else { None };
    }
    let f = diagonal_normal_form(dom, m);
    // x*m = b  <=>  y*D = b*V with y = x*U^{-1}, so x = y*U.
    let c = apply_row(dom, b, &f.v);
    let mut y = vec![dom.zero(); m.rows];
    for (j, cj) in c.iter().enumerate() {
        if j < f.rank {
            let (q, r) = dom.euclidean_divide(cj, f.d.at(j, j), Side::Left).unwrap();
            if !dom.is_zero(&r) {
                return None;
            }
            y[j] = q;
        } else if !dom.is_zero(cj) {
            return None;
        }
    }
    Some(apply_row(dom, &y, &f.u))
}

/// Basis of `{x : x * m = 0}` as rows.
pub fn kernel_rows(dom: &OreDomain, m: &OreMatrix) -> Vec<Vec<OreElement>> {
    if m.rows == 0 {
        return Vec::new();
    }
    let f = diagonal_normal_form(dom, m);
    (f.rank..m.rows).map(|j| f.u.row(j)).collect()
}

/// Generators of `{x : x * m in rowspan(rel)}` as rows.
pub fn kernel_rows_mod(dom: &OreDomain, m: &OreMatrix, rel: &OreMatrix) -> Vec<Vec<OreElement>> {
    assert_eq!(m.cols, rel.cols);
    if rel.rows == 0 {
        return kernel_rows(dom, m);
    }
    let stacked = m.vstack(rel);
    kernel_rows(dom, &stacked)
        .into_iter()
        .map(|row| row[..m.rows].to_vec())
        .collect()
}

/// Try to solve `x * m = b` modulo `rowspan(rel)`.
pub fn solve_row_mod(
    dom: &OreDomain,
    m: &OreMatrix,
    rel: &OreMatrix,
    b: &[OreElement],
) -> Option<Vec<OreElement>> {
    if rel.rows == 0 {
        return solve_row(dom, m, b);
    }
    let stacked = m.vstack(rel);
    solve_row(dom, &stacked, b).map(|x| x[..m.rows].to_vec())
}

/// A finitely presented left module, `A^gens / rowspan(relations)`.
#[derive(Clone)]
pub struct PresentedModule {
    pub domain: OreDomain,
    pub gens: usize,
    pub relations: OreMatrix,
    invariants: Vec<OreElement>,
    free_rank: usize,
    diag: Option<DiagonalForm>,
}

impl std::fmt::Debug for PresentedModule {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.describe())
    }
}

impl PresentedModule {
    pub fn new(domain: OreDomain, gens: usize, relations: OreMatrix) -> PresentedModule {
        assert_eq!(relations.cols, gens, "relation matrix must have one column per generator");
        if domain.is_localized() {
            let base = domain.base().clone();
            // Left-multiplying a row by the unit s^k does not change its span
            // over the localized ring, so denominators can be cleared rowwise.
            let mut cleared = Vec::with_capacity(relations.rows);
            for i in 0..relations.rows {
                let row = relations.row(i);
                let mut maxk = 0;
                for e in &row {
                    if let OreElement::Loc(_, k) = e {
                        maxk = maxk.max(*k);
                    }
                }
                let mut out = Vec::with_capacity(row.len());
                for e in &row {
                    match e {
                        OreElement::Loc(num, k) => {
                            let lifted = base.mul(&base.s_pow(maxk - k), num);
                            out.push(lifted);
                        }
                        _ => panic!("localized module with base-ring entries"),
                    }
                }
                cleared.push(out);
            }
            let base_rel = if cleared.is_empty() {
                OreMatrix::new(&base, 0, gens)
            } else {
                OreMatrix::from_rows(cleared)
            };
            let f = diagonal_normal_form(&base, &base_rel);
            let mut invariants = Vec::new();
            for k in 0..f.rank {
                let d = base.normalize_factor(f.d.at(k, k));
                let loc = OreElement::Loc(Box::new(d), 0);
                let n = domain.normalize_factor(&loc);
                if !domain.is_unit(&n) {
                    invariants.push(n);
                }
            }
            sort_factors(&domain, &mut invariants);
            let free_rank = gens - f.rank;
            return PresentedModule { domain, gens, relations, invariants, free_rank, diag: None };
        }
        let f = diagonal_normal_form(&domain, &relations);
        let mut invariants = Vec::new();
        for k in 0..f.rank {
            let d = domain.normalize_factor(f.d.at(k, k));
            if !domain.is_unit(&d) {
                invariants.push(d);
            }
        }
        sort_factors(&domain, &mut invariants);
        let free_rank = gens - f.rank;
        PresentedModule { domain, gens, relations, invariants, free_rank, diag: Some(f) }
    }

    pub fn zero(domain: &OreDomain) -> PresentedModule {
        PresentedModule::new(domain.clone(), 0, OreMatrix::new(domain, 0, 0))
    }

    pub fn free(domain: &OreDomain, rank: usize) -> PresentedModule {
        PresentedModule::new(domain.clone(), rank, OreMatrix::new(domain, 0, rank))
    }

    /// `A / A*d`.
    pub fn cyclic(domain: &OreDomain, d: OreElement) -> PresentedModule {
        let m = OreMatrix::from_rows(vec![vec![d]]);
        PresentedModule::new(domain.clone(), 1, m)
    }

    /// Direct sum of cyclic quotients `A/A d_i`, e.g. a finite abelian group.
    pub fn from_factors(domain: &OreDomain, factors: &[i64]) -> PresentedModule {
        let mut m = OreMatrix::new(domain, factors.len(), factors.len());
        for (i, &d) in factors.iter().enumerate() {
            m.set(i, i, domain.from_int(d));
        }
        PresentedModule::new(domain.clone(), factors.len(), m)
    }

    pub fn invariants(&self) -> &[OreElement] {
        &self.invariants
    }

    pub fn free_rank(&self) -> usize {
        self.free_rank
    }

    pub fn is_zero_module(&self) -> bool {
        self.invariants.is_empty() && self.free_rank == 0
    }

    pub fn is_finite(&self) -> bool {
        matches!(self.domain.base(), OreDomain::Integers { .. })
            && !self.domain.is_localized()
            && self.free_rank == 0
    }

    fn diag(&self) -> &DiagonalForm {
        self.diag.as_ref().expect("normal form data only over base rings")
    }

    /// Isomorphism test via normal forms: same ring variant, same free rank,
    /// same normalized invariant factors.
    pub fn iso_eq(&self, other: &PresentedModule) -> bool {
        self.domain == other.domain
            && self.free_rank == other.free_rank
            && self.invariants.len() == other.invariants.len()
            && self
                .invariants
                .iter()
                .zip(&other.invariants)
                .all(|(a, b)| self.domain.eq(a, b))
    }

    pub fn describe(&self) -> String {
        let mut parts: Vec<String> = self
            .invariants
            .iter()
            .map(|d| format!("C[{}]", self.domain.display(d)))
            .collect();
        if self.free_rank > 0 {
            parts.push(format!("free^{}", self.free_rank));
        }
        if parts.is_empty() {
            "0".into()
        } else {
            parts.join(" + ")
        }
    }

    /// Canonical representative of a coordinate vector modulo relations.
    pub fn reduce_element(&self, v: &[OreElement]) -> Vec<OreElement> {
        assert_eq!(v.len(), self.gens);
        let dom = &self.domain;
        let f = self.diag();
        let mut w = apply_row(dom, v, &f.v);
        for (j, wj) in w.iter_mut().enumerate() {
            if j < f.rank {
                let d = f.d.at(j, j);
                let (_, r) = dom.euclidean_divide(wj, d, Side::Left).unwrap();
                *wj = r;
            }
        }
        apply_row(dom, &w, &f.v_inv)
    }

    pub fn elements_equal(&self, a: &[OreElement], b: &[OreElement]) -> bool {
        let dom = &self.domain;
        let diff: Vec<OreElement> = a.iter().zip(b).map(|(x, y)| dom.sub(x, y)).collect();
        self.element_is_zero(&diff)
    }

    pub fn element_is_zero(&self, v: &[OreElement]) -> bool {
        if self.domain.is_localized() {
            return self.loc_element_is_zero(v, 64);
        }
        self.reduce_element(v).iter().all(|e| self.domain.is_zero(e))
    }

    /// Over a localized domain: `v` lies in the relation span iff after
    /// clearing denominators `w * phi^K(R_base) = v_base * s^K` is solvable
    /// over the base ring for some bounded `K`.
    fn loc_element_is_zero(&self, v: &[OreElement], max_k: u32) -> bool {
        let dom = &self.domain;
        let base = dom.base();
        let mut maxd = 0;
        for e in v {
            if let OreElement::Loc(_, k) = e {
                maxd = maxd.max(*k);
            } else {
                panic!("base element in localized module");
            }
        }
        let v_base: Vec<OreElement> = v
            .iter()
            .map(|e| match e {
                OreElement::Loc(num, k) => base.mul(&base.s_pow(maxd - k), num),
                _ => unreachable!(),
            })
            .collect();
        let mut rows = Vec::new();
        for i in 0..self.relations.rows {
            let row = self.relations.row(i);
            let mut mk = 0;
            for e in &row {
                if let OreElement::Loc(_, k) = e {
                    mk = mk.max(*k);
                }
            }
            rows.push(
                row.iter()
                    .map(|e| match e {
                        OreElement::Loc(num, k) => base.mul(&base.s_pow(mk - k), num),
                        _ => unreachable!(),
                    })
                    .collect::<Vec<_>>(),
            );
        }
        let r_base = if rows.is_empty() {
            OreMatrix::new(base, 0, self.gens)
        } else {
            OreMatrix::from_rows(rows)
        };
        for k in 0..=max_k {
            let target: Vec<OreElement> =
                v_base.iter().map(|e| base.mul(e, &base.s_pow(k))).collect();
            let twisted = r_base.twist(base, k as i64);
            if solve_row(base, &twisted, &target).is_some() {
                return true;
            }
        }
        false
    }

    /// All elements of a finite integer module, as coordinate vectors.
    pub fn enumerate_elements(&self) -> Vec<Vec<OreElement>> {
        assert!(self.is_finite(), "enumeration needs a finite module");
        let dom = &self.domain;
        let f = self.diag();
        let mut sizes = Vec::new();
        for j in 0..self.gens {
            assert!(j < f.rank);
            match f.d.at(j, j) {
                OreElement::Int(d) => {
                    let d: i64 = d.try_into().expect("enumeration bound");
                    sizes.push(d.unsigned_abs());
                }
                _ => unreachable!(),
            }
        }
        let total: u64 = sizes.iter().product();
        assert!(total <= 1 << 20, "module too large to enumerate");
        let mut out = Vec::with_capacity(total as usize);
        for idx in 0..total {
            let mut k = idx;
            let mut w = Vec::with_capacity(self.gens);
            for &s in &sizes {
                w.push(dom.from_int((k % s) as i64));
                k /= s;
            }
            out.push(apply_row(dom, &w, &f.v_inv));
        }
        out
    }

    /// Number of elements of a finite integer module.
    pub fn cardinality(&self) -> Option<u64> {
        if !self.is_finite() {
            return None;
        }
        let mut total = 1u64;
        for d in &self.invariants {
            match d {
                OreElement::Int(x) => {
                    let v: u64 = x.magnitude().try_into().ok()?;
                    total = total.checked_mul(v)?;
                }
                _ => return None,
            }
        }
        Some(total)
    }
}

fn sort_factors(dom: &OreDomain, factors: &mut [OreElement]) {
    factors.sort_by(|a, b| {
        let ma = dom.measure(a);
        let mb = dom.measure(b);
        ma.cmp(&mb).then_with(|| format!("{a:?}").cmp(&format!("{b:?}")))
    });
}

/// A map of presented left modules, acting on row vectors by `v -> v*matrix`.
#[derive(Clone)]
pub struct ModuleMap {
    pub src: PresentedModule,
    pub dst: PresentedModule,
    pub matrix: OreMatrix,
}

impl std::fmt::Debug for ModuleMap {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{} -> {}", self.src.describe(), self.dst.describe())
    }
}

impl ModuleMap {
    /// Build a map and verify it respects relations.
    pub fn new(src: PresentedModule, dst: PresentedModule, matrix: OreMatrix) -> ModuleMap {
        assert_eq!(matrix.rows, src.gens);
        assert_eq!(matrix.cols, dst.gens);
        let dom = &src.domain;
        assert_eq!(*dom, dst.domain, "maps live over a single ring");
        for i in 0..src.relations.rows {
            let image = apply_row(dom, &src.relations.row(i), &matrix);
            assert!(
                dst.element_is_zero(&image),
                "matrix does not respect relations (row {i})"
            );
        }
        ModuleMap { src, dst, matrix }
    }

    pub fn zero(src: &PresentedModule, dst: &PresentedModule) -> ModuleMap {
        let m = OreMatrix::new(&src.domain, src.gens, dst.gens);
        ModuleMap { src: src.clone(), dst: dst.clone(), matrix: m }
    }

    pub fn identity(m: &PresentedModule) -> ModuleMap {
        ModuleMap {
            src: m.clone(),
            dst: m.clone(),
            matrix: OreMatrix::identity(&m.domain, m.gens),
        }
    }

    pub fn compose(&self, then: &ModuleMap) -> ModuleMap {
        assert_eq!(self.dst.gens, then.src.gens);
        ModuleMap {
            src: self.src.clone(),
            dst: then.dst.clone(),
            matrix: self.matrix.mul(&self.src.domain, &then.matrix),
        }
    }

    pub fn add(&self, other: &ModuleMap) -> ModuleMap {
        ModuleMap {
            src: self.src.clone(),
            dst: self.dst.clone(),
            matrix: self.matrix.add(&self.src.domain, &other.matrix),
        }
    }

    pub fn neg(&self) -> ModuleMap {
        ModuleMap {
            src: self.src.clone(),
            dst: self.dst.clone(),
            matrix: self.matrix.neg(&self.src.domain),
        }
    }

    pub fn is_zero_map(&self) -> bool {
        (0..self.matrix.rows).all(|i| self.dst.element_is_zero(&self.matrix.row(i)))
    }

    pub fn maps_equal(&self, other: &ModuleMap) -> bool {
        self.matrix.rows == other.matrix.rows
            && self.matrix.cols == other.matrix.cols
            && ModuleMap {
                src: self.src.clone(),
                dst: self.dst.clone(),
                matrix: self.matrix.sub(&self.src.domain, &other.matrix),
            }
            .is_zero_map()
    }

    /// Kernel as a presented module with its inclusion.
    pub fn kernel(&self) -> (PresentedModule, ModuleMap) {
        let dom = &self.src.domain;
        let krows = kernel_rows_mod(dom, &self.matrix, &self.dst.relations);
        let krows = krows
            .into_iter()
            .filter(|r| !self.src.element_is_zero(r))
            .collect();
        present_submodule(&self.src, krows)
    }

    /// Cokernel with its projection.
    pub fn cokernel(&self) -> (PresentedModule, ModuleMap) {
        let dom = &self.src.domain;
        let rel = self.dst.relations.vstack(&self.matrix);
        let coker = PresentedModule::new(dom.clone(), self.dst.gens, rel);
        let proj = ModuleMap {
            src: self.dst.clone(),
            dst: coker.clone(),
            matrix: OreMatrix::identity(dom, self.dst.gens),
        };
        (coker, proj)
    }

    /// Given a mono `incl: K -> M` with the same target as `self: B -> M` and
    /// `im(self)` contained in `im(incl)`, produce the factoring `B -> K`.
    pub fn lift_through(&self, incl: &ModuleMap) -> Option<ModuleMap> {
        let dom = &self.src.domain;
        let mut rows = Vec::with_capacity(self.src.gens);
        for i in 0..self.matrix.rows {
            let b = self.matrix.row(i);
            let x = solve_row_mod(dom, &incl.matrix, &incl.dst.relations, &b)?;
            rows.push(x);
        }
        let matrix = if rows.is_empty() {
            OreMatrix::new(dom, 0, incl.src.gens)
        } else {
            OreMatrix::from_rows(rows)
        };
        Some(ModuleMap { src: self.src.clone(), dst: incl.src.clone(), matrix })
    }

    pub fn is_injective(&self) -> bool {
        self.kernel().0.is_zero_module()
    }

    pub fn is_surjective(&self) -> bool {
        self.cokernel().0.is_zero_module()
    }

    pub fn is_iso(&self) -> bool {
        self.is_injective() && self.is_surjective()
    }

    pub fn apply(&self, v: &[OreElement]) -> Vec<OreElement> {
        apply_row(&self.src.domain, v, &self.matrix)
    }
}

/// Present the submodule of `ambient` generated by the given rows; returns
/// the module on those generators together with the inclusion.
pub fn present_submodule(
    ambient: &PresentedModule,
    gen_rows: Vec<Vec<OreElement>>,
) -> (PresentedModule, ModuleMap) {
    let dom = &ambient.domain;
    let g = if gen_rows.is_empty() {
        OreMatrix::new(dom, 0, ambient.gens)
    } else {
        OreMatrix::from_rows(gen_rows)
    };
    let syz = kernel_rows_mod(dom, &g, &ambient.relations);
    let rel = if syz.is_empty() {
        OreMatrix::new(dom, 0, g.rows)
    } else {
        OreMatrix::from_rows(syz)
    };
    let sub = PresentedModule::new(dom.clone(), g.rows, rel);
    let incl = ModuleMap { src: sub.clone(), dst: ambient.clone(), matrix: g };
    (sub, incl)
}

/// Direct sum with injections and projections.
pub fn direct_sum(
    a: &PresentedModule,
    b: &PresentedModule,
) -> (PresentedModule, ModuleMap, ModuleMap, ModuleMap, ModuleMap) {
    let dom = &a.domain;
    let rel = a.relations.block_diag(dom, &b.relations);
    let sum = PresentedModule::new(dom.clone(), a.gens + b.gens, rel);
    let mut inj_a = OreMatrix::new(dom, a.gens, sum.gens);
    for i in 0..a.gens {
        inj_a.set(i, i, dom.one());
    }
    let mut inj_b = OreMatrix::new(dom, b.gens, sum.gens);
    for i in 0..b.gens {
        inj_b.set(i, a.gens + i, dom.one());
    }
    let mut proj_a = OreMatrix::new(dom, sum.gens, a.gens);
    for i in 0..a.gens {
        proj_a.set(i, i, dom.one());
    }
    let mut proj_b = OreMatrix::new(dom, sum.gens, b.gens);
    for i in 0..b.gens {
        proj_b.set(a.gens + i, i, dom.one());
    }
    (
        sum.clone(),
        ModuleMap { src: a.clone(), dst: sum.clone(), matrix: inj_a },
        ModuleMap { src: b.clone(), dst: sum.clone(), matrix: inj_b },
        ModuleMap { src: sum.clone(), dst: a.clone(), matrix: proj_a },
        ModuleMap { src: sum, dst: b.clone(), matrix: proj_b },
    )
}

/// `{v : s^n v = 0}` as a submodule. Multiplication by `s^n` is only
/// twisted-linear, so the kernel is computed from the honest right
/// multiplication `w -> w * s^n` and untwisted afterwards.
pub fn s_power_kernel(m: &PresentedModule, n: u32) -> (PresentedModule, ModuleMap) {
    let dom = &m.domain;
    assert!(!dom.is_localized());
    let mut g = OreMatrix::new(dom, m.gens, m.gens);
    let sn = dom.s_pow(n);
    for i in 0..m.gens {
        g.set(i, i, sn.clone());
    }
    let wrows = kernel_rows_mod(dom, &g, &m.relations);
    let vrows: Vec<Vec<OreElement>> = wrows
        .into_iter()
        .map(|w| w.iter().map(|e| dom.twist_phi(e, n as i64)).collect())
        .filter(|v: &Vec<OreElement>| !m.element_is_zero(v))
        .collect();
    present_submodule(m, vrows)
}

/// The `s`-power torsion submodule: `ker(s^N)` for the stabilizing exponent
/// `N`, together with its inclusion and the exponent.
pub fn torsion_submodule(m: &PresentedModule) -> (PresentedModule, ModuleMap, u32) {
    let dom = &m.domain;
    assert!(!dom.is_localized(), "torsion is taken over the base ring");
    let mut n = 0u32;
    let (mut sub, mut incl) = s_power_kernel(m, 0);
    loop {
        let next_n = n + 1;
        let (nsub, nincl) = s_power_kernel(m, next_n);
        if submodule_leq(&nincl, &incl) {
            return (sub, incl, n);
        }
        sub = nsub;
        incl = nincl;
        n = next_n;
        assert!(n < 4096, "torsion exponent failed to stabilize");
    }
}

/// Is `im(a) <= im(b)` inside the common target?
pub fn submodule_leq(a: &ModuleMap, b: &ModuleMap) -> bool {
    let dom = &a.src.domain;
    for i in 0..a.matrix.rows {
        if solve_row_mod(dom, &b.matrix, &a.dst.relations, &a.matrix.row(i)).is_none() {
            return false;
        }
    }
    true
}

pub fn submodule_eq(a: &ModuleMap, b: &ModuleMap) -> bool {
    submodule_leq(a, b) && submodule_leq(b, a)
}

/// `M / s^n M`, presented by appending the relations `s^n e_j`.
pub fn adic_quotient(m: &PresentedModule, n: u32) -> PresentedModule {
    assert!(n >= 1);
    assert!(!m.domain.is_localized(), "adic quotients are taken over the base ring");
    let dom = &m.domain;
    let mut extra = OreMatrix::new(dom, m.gens, m.gens);
    let sn = dom.s_pow(n);
    for i in 0..m.gens {
        extra.set(i, i, sn.clone());
    }
    PresentedModule::new(dom.clone(), m.gens, m.relations.vstack(&extra))
}

/// The projection `M/s^{n_from}M -> M/s^{n_to}M` (identity on generators).
pub fn adic_projection(m: &PresentedModule, n_from: u32, n_to: u32) -> ModuleMap {
    assert!(n_from >= n_to && n_to >= 1);
    let src = adic_quotient(m, n_from);
    let dst = adic_quotient(m, n_to);
    let id = OreMatrix::identity(&m.domain, m.gens);
    ModuleMap::new(src, dst, id)
}

/// The module with the action twisted by `phi^i`; same coordinates, relation
/// entries transported through the twist.
pub fn twist_module(m: &PresentedModule, i: i64) -> PresentedModule {
    let dom = &m.domain;
    PresentedModule::new(dom.clone(), m.gens, m.relations.twist(dom, -i))
}

/// The localized module, presented over the localized domain by the image of
/// the relation matrix. Verifies that the canonical map kills exactly the
/// torsion: every torsion generator dies in the localization, and the
/// invariant factors of the localization agree with those of `M/torsion`
/// after inverting `s`.
pub fn localize_module(m: &PresentedModule) -> PresentedModule {
    let dom = &m.domain;
    assert!(!dom.is_localized());
    let ldom = dom.localize();
    let lrel = m.relations.localize(dom);
    let lm = PresentedModule::new(ldom.clone(), m.gens, lrel);
    // kernel check, part 1: torsion generators map to zero
    let (_tor, incl, _n) = torsion_submodule(m);
    for i in 0..incl.matrix.rows {
        let v = incl.matrix.row(i);
        let lv: Vec<OreElement> = v.iter().map(|e| dom.localization_map(e)).collect();
        assert!(lm.element_is_zero(&lv), "torsion element survives localization");
    }
    // kernel check, part 2: invariant factors match M/torsion with s inverted
    let (coker, _) = incl.cokernel();
    let expected: Vec<OreElement> = coker
        .invariants()
        .iter()
        .map(|d| ldom.normalize_factor(&OreElement::Loc(Box::new(d.clone()), 0)))
        .filter(|d| !ldom.is_unit(d))
        .collect();
    let got = lm.invariants();
    assert_eq!(expected.len(), got.len(), "localized invariant factors disagree");
    for (a, b) in expected.iter().zip(got) {
        assert!(ldom.eq(a, b), "localized invariant factors disagree");
    }
    assert_eq!(coker.free_rank(), lm.free_rank());
    lm
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::FqCtx;

    fn z2() -> OreDomain {
        OreDomain::integers(2)
    }

    #[test]
    fn cyclic_normal_forms() {
        let z = z2();
        let m = PresentedModule::from_factors(&z, &[12]);
        assert_eq!(m.describe(), "C[12]");
        let f = PresentedModule::free(&z, 2);
        assert_eq!(f.describe(), "free^2");
        assert_eq!(f.free_rank(), 2);
    }

    #[test]
    fn torsion_of_z12_at_2() {
        let z = z2();
        let m = PresentedModule::from_factors(&z, &[12]);
        let (tor, incl, n) = torsion_submodule(&m);
        assert!(tor.iso_eq(&PresentedModule::from_factors(&z, &[4])));
        assert!(incl.is_injective());
        assert_eq!(n, 2);
        // brute force over the 12 elements: {0,3,6,9} are the 2-power torsion
        let elems = m.enumerate_elements();
        let torsion_count = elems
            .iter()
            .filter(|v| {
                let v4: Vec<OreElement> = v.iter().map(|e| z.mul(&z.from_int(4), e)).collect();
                m.element_is_zero(&v4)
            })
            .count();
        assert_eq!(torsion_count, 4);
    }

    #[test]
    fn torsion_of_free_is_zero() {
        let z = z2();
        let m = PresentedModule::free(&z, 1);
        let (tor, _, _) = torsion_submodule(&m);
        assert!(tor.is_zero_module());
    }

    #[test]
    fn skew_x2_quotient_is_all_torsion() {
        let d = OreDomain::skew(FqCtx::f4(), 1);
        let x2 = d.mul(&d.s(), &d.s());
        let m = PresentedModule::cyclic(&d, x2);
        let (tor, incl, n) = torsion_submodule(&m);
        assert!(tor.iso_eq(&m));
        assert_eq!(n, 2);
        assert!(incl.is_iso());
    }

    #[test]
    fn adic_quotients_of_z12() {
        let z = z2();
        let m = PresentedModule::from_factors(&z, &[12]);
        assert!(adic_quotient(&m, 1).iso_eq(&PresentedModule::from_factors(&z, &[2])));
        assert!(adic_quotient(&m, 2).iso_eq(&PresentedModule::from_factors(&z, &[4])));
        assert!(adic_quotient(&m, 3).iso_eq(&PresentedModule::from_factors(&z, &[4])));
        // Z/3 has s = 2 invertible
        let m3 = PresentedModule::from_factors(&z, &[3]);
        for n in 1..4 {
            assert!(adic_quotient(&m3, n).is_zero_module());
        }
        // natural projections commute with the construction
        let p = adic_projection(&m, 3, 2);
        assert!(p.is_surjective());
    }

    #[test]
    fn localize_z4_and_z3_and_free() {
        let z = z2();
        let m4 = localize_module(&PresentedModule::from_factors(&z, &[4]));
        assert!(m4.is_zero_module());
        let m3 = localize_module(&PresentedModule::from_factors(&z, &[3]));
        assert_eq!(m3.invariants().len(), 1);
        assert!(!m3.is_zero_module());
        let mf = localize_module(&PresentedModule::free(&z, 1));
        assert_eq!(mf.free_rank(), 1);
    }

    #[test]
    fn twist_preserves_invariants_and_is_invertible() {
        let d = OreDomain::skew(FqCtx::f4(), 1);
        let m = PresentedModule::cyclic(&d, d.s());
        let t = twist_module(&m, 1);
        assert_eq!(t.invariants().len(), m.invariants().len());
        let back = twist_module(&t, -1);
        assert!(back.relations.eq(&d, &m.relations));
        // integers: twist is the identity
        let z = z2();
        let mz = PresentedModule::from_factors(&z, &[6]);
        assert!(twist_module(&mz, 5).relations.eq(&z, &mz.relations));
    }

    #[test]
    fn kernel_cokernel_of_multiplication() {
        let z = z2();
        let m = PresentedModule::from_factors(&z, &[12]);
        // multiplication by 4 on Z/12 (central, so an honest module map)
        let mut mat = OreMatrix::new(&z, 1, 1);
        mat.set(0, 0, z.from_int(4));
        let f = ModuleMap::new(m.clone(), m.clone(), mat);
        let (k, _) = f.kernel();
        assert!(k.iso_eq(&PresentedModule::from_factors(&z, &[4])));
        let (c, _) = f.cokernel();
        assert!(c.iso_eq(&PresentedModule::from_factors(&z, &[4])));
    }

    #[test]
    fn exactness_torsion_into_localization() {
        // 0 -> tor(M) -> M -> M_s is exact for a sample of finite modules
        let z = z2();
        for factors in [vec![12], vec![4, 8], vec![6, 2], vec![9]] {
            let m = PresentedModule::from_factors(&z, &factors);
            let (_, incl, _) = torsion_submodule(&m);
            assert!(incl.is_injective());
            let lm = localize_module(&m); // runs the kernel checks internally
            let _ = lm;
        }
    }

    #[test]
    fn direct_sum_shapes() {
        let z = z2();
        let a = PresentedModule::from_factors(&z, &[4]);
        let b = PresentedModule::free(&z, 1);
        let (s, ia, ib, pa, pb) = direct_sum(&a, &b);
        assert_eq!(s.free_rank(), 1);
        assert_eq!(s.invariants().len(), 1);
        assert!(ia.compose(&pa).maps_equal(&ModuleMap::identity(&a)));
        assert!(ib.compose(&pb).maps_equal(&ModuleMap::identity(&b)));
        assert!(ia.compose(&pb).is_zero_map());
    }

    #[test]
    fn solve_and_lift() {
        let z = z2();
        let m = PresentedModule::from_factors(&z, &[8]);
        let sub_rows = vec![vec![z.from_int(2)]];
        let (sub, incl) = present_submodule(&m, sub_rows);
        assert!(sub.iso_eq(&PresentedModule::from_factors(&z, &[4])));
        // the multiplication-by-4 map factors through the submodule 2Z/8
        let mut mat = OreMatrix::new(&z, 1, 1);
        mat.set(0, 0, z.from_int(4));
        let f = ModuleMap::new(m.clone(), m.clone(), mat);
        let g = f.lift_through(&incl).expect("factors");
        assert!(g.compose(&incl).maps_equal(&f));
    }
}
