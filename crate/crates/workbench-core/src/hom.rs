//! Hom groups of presented modules, as modules over the centre.
//!
//! Over the integers `Hom(M, N)` is itself a finitely presented abelian
//! group and is computed with explicit generating homomorphisms, so induced
//! maps (pre/post composition) can be expressed in coordinates. Over a skew
//! polynomial ring only `s`-power torsion modules have a representable Hom;
//! it is a vector space over the fixed subfield of the twist, computed by
//! solving the commutation equations on a prime-field realization.

use std::sync::Arc;

use thiserror::Error;

use crate::field::{Fq, FqCtx};
use crate::fplin::FpMat;
use crate::module::{kernel_rows, solve_row, ModuleMap, PresentedModule};
use crate::ore::matrix::OreMatrix;
use crate::ore::{OreDomain, OreElement};

#[derive(Debug, Error)]
pub enum HomError {
    #[error("Hom is not representable here: {0}")]
    NotRepresentable(String),
}

/// `Hom(M, N)` over a ring in which all centre-module data can be shown.
#[derive(Debug)]
pub enum CenterModule {
    /// Over the integers: a finitely presented abelian group.
    Abelian(PresentedModule),
    /// Over a skew polynomial ring: a vector space over the fixed subfield
    /// `F_{p^e}` of the twist; `dim` is the dimension over that subfield.
    VectorSpace { p: u64, fixed_degree: usize, dim: usize },
}

impl CenterModule {
    pub fn describe(&self) -> String {
        match self {
            CenterModule::Abelian(m) => m.describe(),
            CenterModule::VectorSpace { p, fixed_degree, dim } => {
                format!("F_{{{}^{}}}-vector space of dimension {}", p, fixed_degree, dim)
            }
        }
    }
}

/// `Hom_Z(M, N)` for presented modules over the integers, with a generating
/// set of explicit matrices.
pub struct HomGroupZ {
    pub source: PresentedModule,
    pub target: PresentedModule,
    /// Presentation of the hom group on `basis.len()` generators.
    pub group: PresentedModule,
    /// Generating homomorphisms as matrices source.gens x target.gens.
    pub basis: Vec<OreMatrix>,
}

fn vec_of_matrix(dom: &OreDomain, m: &OreMatrix) -> Vec<OreElement> {
    let mut out = Vec::with_capacity(m.rows * m.cols);
    for i in 0..m.rows {
        for j in 0..m.cols {
            out.push(m.at(i, j).clone());
        }
    }
    let _ = dom;
    out
}

pub fn hom_group_z(m: &PresentedModule, n: &PresentedModule) -> HomGroupZ {
    let dom = &m.domain;
    assert!(matches!(dom.base(), OreDomain::Integers { .. }) && !dom.is_localized());
    assert_eq!(*dom, n.domain);
    let (gm, gn) = (m.gens, n.gens);
    let (rm, rn) = (m.relations.rows, n.relations.rows);
    // Unknowns: X (gm x gn) and slack U (rm x rn), subject to
    // (row_i(R_M)) * X - U_i * R_N = 0 for every relation row i.
    let unknowns = gm * gn + rm * rn;
    let constraints = rm * gn;
    let mut sys = OreMatrix::new(dom, unknowns, constraints);
    for i in 0..rm {
        for c in 0..gn {
            let con = i * gn + c;
            for j in 0..gm {
                sys.set(j * gn + c, con, m.relations.at(i, j).clone());
            }
            for t in 0..rn {
                let idx = gm * gn + i * rn + t;
                sys.set(idx, con, dom.neg(n.relations.at(t, c)));
            }
        }
    }
    let sols = kernel_rows(dom, &sys);
    let basis: Vec<OreMatrix> = sols
        .iter()
        .map(|row| {
            let mut x = OreMatrix::new(dom, gm, gn);
            for j in 0..gm {
                for c in 0..gn {
                    x.set(j, c, row[j * gn + c].clone());
                }
            }
            x
        })
        .collect();
    // Trivial maps: row j of X is a relation row of N.
    let mut triv = Vec::new();
    for j in 0..gm {
        for t in 0..rn {
            let mut x = OreMatrix::new(dom, gm, gn);
            for c in 0..gn {
                x.set(j, c, n.relations.at(t, c).clone());
            }
            triv.push(x);
        }
    }
    // Express trivial maps in the basis to get relations for the hom group.
    let basis_rows = if basis.is_empty() {
        OreMatrix::new(dom, 0, gm * gn)
    } else {
        OreMatrix::from_rows(basis.iter().map(|b| vec_of_matrix(dom, b)).collect())
    };
    let mut rel_rows = Vec::new();
    for t in &triv {
        let v = vec_of_matrix(dom, t);
        let coords = solve_row(dom, &basis_rows, &v)
            .expect("trivial homomorphisms lie in the solution lattice");
        rel_rows.push(coords);
    }
    let rel = if rel_rows.is_empty() {
        OreMatrix::new(dom, 0, basis.len())
    } else {
        OreMatrix::from_rows(rel_rows)
    };
    let group = PresentedModule::new(dom.clone(), basis.len(), rel);
    HomGroupZ { source: m.clone(), target: n.clone(), group, basis }
}

impl HomGroupZ {
    /// Coordinates of a homomorphism matrix in the generating set.
    pub fn express(&self, x: &OreMatrix) -> Vec<OreElement> {
        let dom = &self.source.domain;
        let basis_rows = if self.basis.is_empty() {
            OreMatrix::new(dom, 0, self.source.gens * self.target.gens)
        } else {
            OreMatrix::from_rows(self.basis.iter().map(|b| vec_of_matrix(dom, b)).collect())
        };
        solve_row(dom, &basis_rows, &vec_of_matrix(dom, x))
            .expect("matrix is not a homomorphism in this lattice")
    }

    /// The element-of-hom-group for a coordinate vector.
    pub fn matrix_of(&self, coords: &[OreElement]) -> OreMatrix {
        let dom = &self.source.domain;
        let mut out = OreMatrix::new(dom, self.source.gens, self.target.gens);
        for (k, c) in coords.iter().enumerate() {
            for i in 0..out.rows {
                for j in 0..out.cols {
                    let t = dom.mul(c, self.basis[k].at(i, j));
                    let v = dom.add(out.at(i, j), &t);
                    out.set(i, j, v);
                }
            }
        }
        out
    }

    /// The map `Hom(M, N) -> Hom(M', N)` induced by precomposition with
    /// `f : M' -> M`.
    pub fn precompose_into(&self, f: &ModuleMap, target_group: &HomGroupZ) -> ModuleMap {
        let dom = &self.source.domain;
        let mut rows = Vec::new();
        for b in &self.basis {
            let comp = f.matrix.mul(dom, b);
            rows.push(target_group.express(&comp));
        }
        let mat = if rows.is_empty() {
            OreMatrix::new(dom, 0, target_group.group.gens)
        } else {
            OreMatrix::from_rows(rows)
        };
        ModuleMap::new(self.group.clone(), target_group.group.clone(), mat)
    }

    /// The map `Hom(M, N) -> Hom(M, N')` induced by postcomposition with
    /// `g : N -> N'`.
    pub fn postcompose_into(&self, g: &ModuleMap, target_group: &HomGroupZ) -> ModuleMap {
        let dom = &self.source.domain;
        let mut rows = Vec::new();
        for b in &self.basis {
            let comp = b.mul(dom, &g.matrix);
            rows.push(target_group.express(&comp));
        }
        let mat = if rows.is_empty() {
            OreMatrix::new(dom, 0, target_group.group.gens)
        } else {
            OreMatrix::from_rows(rows)
        };
        ModuleMap::new(self.group.clone(), target_group.group.clone(), mat)
    }
}

// ---------------------------------------------------------------------------
// F_p realizations of s-power-torsion modules over skew polynomial rings.
// ---------------------------------------------------------------------------

/// An `s`-power-torsion module over `F_{p^m}[x; sigma]` realized as an
/// `F_p`-space with the actions of `x` and of the field basis elements.
pub struct FpRealization {
    pub p: u64,
    pub dim: usize,
    /// Action of `x` (column convention: v -> M v).
    pub x_action: FpMat,
    /// Actions of the field basis `t^0 .. t^{m-1}`.
    pub const_actions: Vec<FpMat>,
}

fn fq_mult_matrix(ctx: &Arc<FqCtx>, c: &Fq) -> FpMat {
    // matrix of multiplication by c on F_q over F_p, in the power basis
    let m = ctx.m;
    let mut cols = Vec::new();
    for b in 0..m {
        let mut basis = vec![0u64; m];
        basis[b] = 1;
        let be = Fq::from_coeffs(ctx, &basis);
        let prod = c.mul(&be);
        cols.push(prod.coeffs.clone());
    }
    FpMat::from_cols(ctx.p, m, &cols)
}

fn fq_frobenius_matrix(ctx: &Arc<FqCtx>, power: i64) -> FpMat {
    let m = ctx.m;
    let mut cols = Vec::new();
    for b in 0..m {
        let mut basis = vec![0u64; m];
        basis[b] = 1;
        let be = Fq::from_coeffs(ctx, &basis);
        cols.push(be.frobenius(power).coeffs.clone());
    }
    FpMat::from_cols(ctx.p, m, &cols)
}

/// Realize a torsion module given by its normalized invariant factors
/// `x^{k_1}, ..., x^{k_r}` (every `s`-power-torsion module over the skew ring
/// has monomial invariant factors).
pub fn realize_torsion_skew(m: &PresentedModule) -> Result<FpRealization, HomError> {
    let dom = &m.domain;
    let (ctx, sigma_power) = match dom.base() {
        OreDomain::SkewPoly { field, sigma_power } => (field.clone(), *sigma_power),
        _ => return Err(HomError::NotRepresentable("not a skew polynomial ring".into())),
    };
    if m.free_rank() > 0 {
        return Err(HomError::NotRepresentable(
            "module has a free summand, so Hom data is infinite dimensional".into(),
        ));
    }
    let mut exps = Vec::new();
    for d in m.invariants() {
        match d {
            OreElement::Poly(c) => {
                let deg = c.len() - 1;
                if c[..deg].iter().any(|ci| !ci.is_zero()) {
                    return Err(HomError::NotRepresentable(
                        "invariant factor is not an s-power, module is not s-torsion".into(),
                    ));
                }
                exps.push(deg);
            }
            _ => unreachable!(),
        }
    }
    let p = ctx.p;
    let fdeg = ctx.m;
    let dim: usize = exps.iter().map(|k| k * fdeg).sum();
    // basis index (block j, x-degree t, field basis b)
    let offset = |j: usize, t: usize, exps: &[usize]| -> usize {
        let mut off = 0;
        for k in exps.iter().take(j) {
            off += k * fdeg;
        }
        off + t * fdeg
    };
    // x action: x * (c x^t) = sigma(c) x^{t+1}
    let frob = fq_frobenius_matrix(&ctx, sigma_power);
    let mut x_action = FpMat::zero(p, dim, dim);
    for (j, &k) in exps.iter().enumerate() {
        for t in 0..k.saturating_sub(1) {
            let src = offset(j, t, &exps);
            let dst = offset(j, t + 1, &exps);
            for a in 0..fdeg {
                for b in 0..fdeg {
                    x_action.add_at(dst + a, src + b, frob.at(a, b));
                }
            }
        }
    }
    // constant actions: gamma * (c x^t) = (gamma c) x^t
    let mut const_actions = Vec::new();
    for g in 0..fdeg {
        let mut coeffs = vec![0u64; fdeg];
        coeffs[g] = 1;
        let gamma = Fq::from_coeffs(&ctx, &coeffs);
        let mult = fq_mult_matrix(&ctx, &gamma);
        let mut act = FpMat::zero(p, dim, dim);
        for (j, &k) in exps.iter().enumerate() {
            for t in 0..k {
                // gamma acting in the x^t slot: t slots twist gamma by sigma^{-t}?
                // No: left multiplication passes gamma across x^t inside the
                // class of c x^t only when rewriting; here the basis is
                // c x^t with c in F_q, and gamma * (c x^t) = (gamma*c) x^t.
                let off = offset(j, t, &exps);
                for a in 0..fdeg {
                    for b in 0..fdeg {
                        act.add_at(off + a, off + b, mult.at(a, b));
                    }
                }
            }
        }
        const_actions.push(act);
    }
    Ok(FpRealization { p, dim, x_action, const_actions })
}

/// Dimension over `F_p` of `Hom_A(M, N)` for realized torsion modules.
pub fn hom_dim_p(m: &FpRealization, n: &FpRealization) -> usize {
    assert_eq!(m.p, n.p);
    let p = m.p;
    let (dm, dn) = (m.dim, n.dim);
    if dm == 0 || dn == 0 {
        return 0;
    }
    // unknown Phi (dn x dm) with Phi*g_M = g_N*Phi for each generator action
    let unknowns = dn * dm;
    let mut rows: Vec<Vec<u64>> = Vec::new();
    let mut gens: Vec<&FpMat> = vec![&m.x_action];
    let mut gens_n: Vec<&FpMat> = vec![&n.x_action];
    for (a, b) in m.const_actions.iter().zip(&n.const_actions) {
        gens.push(a);
        gens_n.push(b);
    }
    for (gm, gn) in gens.iter().zip(&gens_n) {
        for i in 0..dn {
            for j in 0..dm {
                // equation (i, j): sum_k Phi[i][k] gm[k][j] - gn[i][k] Phi[k][j] = 0
                let mut row = vec![0u64; unknowns];
                for k in 0..dm {
                    row[i * dm + k] = (row[i * dm + k] + gm.at(k, j)) % p;
                }
                for k in 0..dn {
                    row[k * dm + j] = (row[k * dm + j] + p - gn.at(i, k) % p) % p;
                }
                rows.push(row);
            }
        }
    }
    let sys = FpMat::from_rows(p, &rows);
    sys.column_kernel().cols
}

/// The fixed subfield degree of the twist: `sigma = Frobenius^k` on
/// `F_{p^m}` has fixed field `F_{p^gcd(k, m)}`.
pub fn fixed_subfield_degree(dom: &OreDomain) -> usize {
    match dom.base() {
        OreDomain::SkewPoly { field, sigma_power } => {
            let m = field.m as i64;
            let k = sigma_power.rem_euclid(m);
            if k == 0 {
                field.m
            } else {
                num_integer::gcd(k, m) as usize
            }
        }
        _ => panic!("fixed subfield only for skew rings"),
    }
}

/// `Hom_A(M, N)` as a module over the centre. Over the integers this is the
/// full finitely presented group; over a skew polynomial ring one of the two
/// arguments must be `s`-power torsion.
pub fn hom_module(m: &PresentedModule, n: &PresentedModule) -> Result<CenterModule, HomError> {
    let dom = &m.domain;
    assert_eq!(*dom, n.domain);
    match dom.base() {
        OreDomain::Integers { .. } => {
            if dom.is_localized() {
                return Err(HomError::NotRepresentable(
                    "hom over localized rings is not provided".into(),
                ));
            }
            Ok(CenterModule::Abelian(hom_group_z(m, n).group))
        }
        OreDomain::SkewPoly { .. } => {
            // Hom(A^r + torsion, N): free columns contribute copies of N, so
            // both sides must be torsion for a finite answer unless the free
            // part is absent.
            let m_torsion = m.free_rank() == 0;
            let n_torsion = n.free_rank() == 0;
            if !m_torsion && !n_torsion {
                return Err(HomError::NotRepresentable(
                    "at least one argument must be s-power torsion over a skew ring".into(),
                ));
            }
            if !m_torsion {
                // Hom(A, N) contributes N per free generator; N is torsion.
                let rm = realize_torsion_skew(&torsion_part(m)?)?;
                let rn = realize_torsion_skew(n)?;
                let d = hom_dim_p(&rm, &rn) + m.free_rank() * rn.dim;
                let e = fixed_subfield_degree(dom);
                assert_eq!(d % e, 0, "hom dimension must be a multiple of the fixed degree");
                return Ok(CenterModule::VectorSpace {
                    p: rn.p,
                    fixed_degree: e,
                    dim: d / e,
                });
            }
            if !n_torsion {
                // Hom(torsion, free + torsion) = Hom(torsion, torsion part):
                // a torsion image cannot meet the free part.
                let rm = realize_torsion_skew(m)?;
                let nt = torsion_part(n)?;
                let rn = realize_torsion_skew(&nt)?;
                let d = hom_dim_p(&rm, &rn);
                let e = fixed_subfield_degree(dom);
                assert_eq!(d % e, 0);
                return Ok(CenterModule::VectorSpace { p: rm.p, fixed_degree: e, dim: d / e });
            }
            let rm = realize_torsion_skew(m)?;
            let rn = realize_torsion_skew(n)?;
            let d = hom_dim_p(&rm, &rn);
            let e = fixed_subfield_degree(dom);
            assert_eq!(d % e, 0);
            Ok(CenterModule::VectorSpace { p: rm.p, fixed_degree: e, dim: d / e })
        }
        OreDomain::Localized { .. } => unreachable!(),
    }
}

fn torsion_part(m: &PresentedModule) -> Result<PresentedModule, HomError> {
    let (t, _, _) = crate::module::torsion_submodule(m);
    Ok(t)
}
