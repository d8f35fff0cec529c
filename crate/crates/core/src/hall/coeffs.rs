use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};

use crate::class::IsoClass;
use crate::dynkin::homogeneity_solutions;
use crate::error::{Error, Result};
use crate::orbits::{aut_order, ElementaryOp, OrbitCatalog};
use crate::poly::{rat, LaurentPoly, Var};
use crate::repkit::HomTable;

use super::{HallContext, PrimeCounter};

/// `e = E / (q − 1)` and `e(1)`.
pub fn reduced_ext(ext: &LaurentPoly) -> Result<(LaurentPoly, BigRational)> {
    let qm1 = LaurentPoly::from_coeffs(Var::Q, &[-1, 1]);
    let e = ext.div_exact_or(&qm1, "extension count")?;
    let at_one = e.eval_int(1);
    Ok((e, at_one))
}

/// Set `e^Υ` and the regularity flag on every operation.
pub fn fill_e_values(ctx: &mut HallContext, ops: &mut [ElementaryOp]) -> Result<()> {
    for u in ops.iter_mut() {
        let ext = ctx.ext_poly(u.s, u.t, &u.middle)?;
        let (_, at_one) = reduced_ext(&ext.poly)?;
        let value = at_one
            .is_integer()
            .then(|| at_one.to_integer().to_i64())
            .flatten()
            .ok_or_else(|| Error::Internal(format!("e^Υ = {at_one} is not an integer")))?;
        u.e_value = Some(value);
        u.regular = Some(value != 0);
    }
    Ok(())
}

fn table(ctx: &mut HallContext) -> Result<HomTable> {
    let p = ctx.primes.take(1)?[0];
    Ok(ctx.counter(p)?.kit().table().clone())
}

fn unit(nu: usize, t: usize, mult: u32) -> IsoClass {
    let mut c = IsoClass::zero(nu);
    c.0[t] = mult;
    c
}

#[derive(Clone, Debug)]
pub struct RiedtmannReport {
    pub s: usize,
    pub t: usize,
    pub middle: IsoClass,
    pub hall: LaurentPoly,
    pub ext: LaurentPoly,
    pub lhs: LaurentPoly,
    pub rhs: LaurentPoly,
    pub pass: bool,
}

/// `F^{V}_{b(t), b(s)} · a_{b(t)} · a_{b(s)} = E^{V}_{b(t), b(s)} · a_V`.
pub fn riedtmann_check(ctx: &mut HallContext, s: usize, t: usize, middle: &IsoClass) -> Result<RiedtmannReport> {
    let nu = ctx.word().nu();
    let (bs, bt) = (unit(nu, s, 1), unit(nu, t, 1));
    let hall = ctx.hall_poly(middle, &bt, &bs)?.poly;
    let ext = ctx.ext_poly(s, t, middle)?.poly;
    let table = table(ctx)?;
    let lhs = &(&hall * &aut_order(&table, &bt)) * &aut_order(&table, &bs);
    let rhs = &ext * &aut_order(&table, middle);
    Ok(RiedtmannReport {
        s,
        t,
        middle: middle.clone(),
        pass: lhs == rhs,
        hall,
        ext,
        lhs,
        rhs,
    })
}

/// `Ω^c_{c'}` as a polynomial in `u = v²`, normalised to lowest exponent 0.
#[derive(Clone, Debug)]
pub struct OmegaCoeff {
    pub cprime: IsoClass,
    pub c: IsoClass,
    pub poly: LaurentPoly,
    pub value_at_1: BigRational,
    /// `dΩ/du` at `u = 1`.
    pub derivative_at_1: BigRational,
}

impl OmegaCoeff {
    /// `dΩ/dv` at `v = 1`.
    pub fn d_dv(&self) -> BigRational {
        &self.derivative_at_1 * rat(2)
    }
}

/// `Ω^c_{c'}(u) = F^c_{c'^ν, …, c'^1}(u⁻¹) · Π_t a_{c'^t}(u⁻¹) / a_c(u⁻¹)`,
/// with the isotypic pieces `c'^t = c'_t b(t)` listed from `t = ν` down.
pub fn omega(ctx: &mut HallContext, catalog: &OrbitCatalog, cprime: &IsoClass, c: &IsoClass) -> Result<OmegaCoeff> {
    let key = (cprime.clone(), c.clone());
    if let Some(o) = ctx.omegas.get(&key) {
        return Ok(o.clone());
    }
    let poly = if catalog.leq(cprime, c)? {
        let pieces: Vec<IsoClass> = (0..cprime.len())
            .rev()
            .filter(|&t| cprime.0[t] > 0)
            .map(|t| unit(cprime.len(), t, cprime.0[t]))
            .collect();
        let f = ctx.filtration_poly(c, &pieces)?.poly;
        let num = pieces
            .iter()
            .fold(f, |acc, piece| &acc * &catalog.aut_order(piece));
        let g = num.div_exact_or(&catalog.aut_order(c), &format!("Ω^{c}_{cprime}"))?;
        g.invert_variable(Var::U).normalize_lowest()
    } else {
        LaurentPoly::zero(Var::U)
    };
    let out = OmegaCoeff {
        cprime: cprime.clone(),
        c: c.clone(),
        value_at_1: poly.eval_int(1),
        derivative_at_1: poly.derivative().eval_int(1),
        poly,
    };
    ctx.omegas.insert(key, out.clone());
    Ok(out)
}

/// One comparable pair `c' ≺ c` checked against the derivative criterion.
#[derive(Clone, Debug)]
pub struct MainCheck {
    pub cprime: IsoClass,
    pub c: IsoClass,
    pub omega_at_1: BigRational,
    /// `dΩ/dv` at `v = 1`.
    pub derivative: BigRational,
    /// Regular operations with `c' + op^Υ = c`.
    pub connecting: Vec<ElementaryOp>,
    pub expected: BigRational,
    /// More than one regular operation connects the pair; `expected` is
    /// then the sum of their contributions.
    pub multiple: bool,
    pub pass: bool,
}

/// `Ω(1) = 0`, and `dΩ/dv(1)` is `−2 c'_s c'_t e^Υ` when a regular `Υ`
/// takes `c'` to `c`, zero otherwise. `ops` must carry `e^Υ`.
pub fn theorem_main_check(
    ctx: &mut HallContext,
    catalog: &OrbitCatalog,
    ops: &[ElementaryOp],
    cprime: &IsoClass,
    c: &IsoClass,
) -> Result<MainCheck> {
    let om = omega(ctx, catalog, cprime, c)?;
    let mut connecting = Vec::new();
    let mut expected = BigRational::zero();
    for u in ops {
        let e = u
            .e_value
            .ok_or_else(|| Error::Internal("elementary operation without e^Υ".into()))?;
        if e == 0 || u.apply(cprime).as_ref() != Some(c) {
            continue;
        }
        let weight = i64::from(cprime.0[u.s]) * i64::from(cprime.0[u.t]);
        expected += rat(-2 * weight * e);
        connecting.push(u.clone());
    }
    let derivative = om.d_dv();
    let pass = om.value_at_1.is_zero() && derivative == expected;
    Ok(MainCheck {
        cprime: cprime.clone(),
        c: c.clone(),
        omega_at_1: om.value_at_1,
        derivative,
        multiple: connecting.len() > 1,
        connecting,
        expected,
        pass,
    })
}

#[derive(Clone, Debug)]
pub struct SumCheck {
    pub class: IsoClass,
    /// `−Σ_{c^min ≺ c'' ≼ c} dΩ^{c''}_{c^min}/du(1)`.
    pub sum_from_min: BigRational,
    pub dim_ed_support: i64,
    pub rationally_smooth: bool,
    /// For smooth `c`: `(c', −Σ_{c' ≺ c'' ≼ c} dΩ^{c''}_{c'}/du(1), d(c) − d(c'))`.
    pub interval_sums: Vec<(IsoClass, BigRational, i64)>,
    pub pass: bool,
}

fn interval_sum(ctx: &mut HallContext, catalog: &OrbitCatalog, low: &IsoClass, c: &IsoClass) -> Result<BigRational> {
    let mut sum = BigRational::zero();
    for mid in catalog.classes() {
        if mid == low || !catalog.leq(low, mid)? || !catalog.leq(mid, c)? {
            continue;
        }
        sum -= omega(ctx, catalog, low, mid)?.derivative_at_1;
    }
    Ok(sum)
}

/// The derivative sums over intervals below `c`: from `c^min` they give
/// `dim E_d(J(c))`; for smooth `c`, from any `c' ≼ c` they give `d(c) − d(c')`.
pub fn smoothness_sum_check(ctx: &mut HallContext, catalog: &OrbitCatalog, c: &IsoClass) -> Result<SumCheck> {
    let cmin = catalog.cmin();
    let sum_from_min = interval_sum(ctx, catalog, &cmin, c)?;
    let dim_ed_support = catalog.dim_ed_support(c);
    let mut pass = sum_from_min == rat(dim_ed_support);
    let rationally_smooth = catalog.is_rationally_smooth(c)?;
    let mut interval_sums = Vec::new();
    if rationally_smooth {
        let dc = catalog.orbit_dim(c)?;
        for cp in catalog.classes() {
            if !catalog.leq(cp, c)? {
                continue;
            }
            let sum = interval_sum(ctx, catalog, cp, c)?;
            let want = dc - catalog.orbit_dim(cp)?;
            pass &= sum == rat(want);
            interval_sums.push((cp.clone(), sum, want));
        }
    }
    Ok(SumCheck {
        class: c.clone(),
        sum_from_min,
        dim_ed_support,
        rationally_smooth,
        interval_sums,
        pass,
    })
}

/// Both bracketings of the three-step filtration count of `e(top)` with
/// quotients `a, b, c` (top first):
/// `Σ_x F^{top}_{a,x} F^x_{b,c}` and `Σ_y F^{top}_{y,c} F^y_{a,b}`.
pub fn hall_associativity(
    counter: &PrimeCounter,
    top: &IsoClass,
    a: &IsoClass,
    b: &IsoClass,
    c: &IsoClass,
) -> Result<(u128, u128)> {
    let word = counter.kit().word();
    let dim = |x: &IsoClass| word.dim_vector(x);
    let add = |x: Vec<i64>, y: Vec<i64>| -> Vec<i64> { x.iter().zip(&y).map(|(p, q)| p + q).collect() };
    let kit = counter.kit();
    let top_rep = kit.rep_of_class(top);
    let mut lhs = 0u128;
    for x in homogeneity_solutions(word, &add(dim(b), dim(c)))? {
        let outer = counter.count_submodules(&top_rep, &x, a)?;
        if outer > 0 {
            lhs += outer * counter.count_submodules(&kit.rep_of_class(&x), c, b)?;
        }
    }
    let mut rhs = 0u128;
    for y in homogeneity_solutions(word, &add(dim(a), dim(b)))? {
        let outer = counter.count_submodules(&top_rep, c, &y)?;
        if outer > 0 {
            rhs += outer * counter.count_submodules(&kit.rep_of_class(&y), b, a)?;
        }
    }
    Ok((lhs, rhs))
}
