//! Exact size of `∩_{d ∈ S} D_{n,(d, n/d)}` without listing the sets.
//!
//! One divisor `d0 ∈ S` is the pivot: every member is `f = g ∘ h` with
//! `deg g = d0`. Up to the shift action each orbit has exactly one member
//! with `h` missing its `x^(e0-1)` term. The coefficients of `h` and `g` are
//! split into an enumerated part and unknowns `y`. The unknowns reach at most
//! the lowest of the top `n/d - 1` coefficients of `f` for every other
//! `d ∈ S`, so each other right factor `h_d` is pinned down except for its
//! linear term, which is then affine in `y`. Membership says
//! `f = h_d^d + Σ c_t h_d^t` for constants `c_t`: linear in `(y, c)` above a
//! known degree. Each solution of the linear part is checked exactly.
//!
//! The enumerated vectors are further reduced by the scaling action
//! `f ↦ c^(-n) f(c x)`, which preserves every `D_{n,d}` and acts diagonally
//! on coefficients.

use num_bigint::BigUint;
use num_integer::Integer;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use super::zp::{solve, Solution, Zp};
use crate::ffpoly::PrimeField;
use crate::{Error, Result};

#[derive(Clone, Debug, PartialEq)]
pub(crate) struct Plan {
    pub pivot: usize,
    /// Coefficients `1..=low` of `h` are unknowns.
    pub low: usize,
    /// Coefficients `1..=free_g` of `g` are unknowns.
    pub free_g: usize,
    pub others: Vec<Other>,
    pub enumerated: usize,
    pub cost: f64,
}

#[derive(Clone, Debug, PartialEq)]
pub(crate) struct Other {
    pub d: usize,
    pub e: usize,
    /// The unknowns reach the coefficient that fixes the linear term of `h_d`.
    pub touched: bool,
    /// The equations for this divisor are linear above this degree.
    pub linear_above: usize,
}

impl Plan {
    fn nonlinear(&self) -> bool {
        self.others.iter().any(|o| o.linear_above > 0)
    }
}

fn plan_for(n: usize, set: &[usize], pivot: usize, low: usize, free_g: usize, p: f64) -> Option<Plan> {
    let e0 = n / pivot;
    if low > e0.saturating_sub(2) || free_g > pivot - 1 {
        return None;
    }
    let e_max = set.iter().filter(|&&d| d != pivot).map(|&d| n / d).max()?;
    let reach = (if low > 0 { (pivot - 1) * e0 + low } else { 0 }).max(free_g * e0);
    if reach > n + 1 - e_max {
        return None;
    }
    let mut f_nonlinear = 0;
    if low > 0 {
        f_nonlinear = 2 * low + (pivot - 2) * e0;
        if free_g > 0 {
            f_nonlinear = f_nonlinear.max(low + (free_g - 1) * e0);
        }
    }
    let mut others = Vec::new();
    let (mut equations, mut c_active) = (0usize, 0usize);
    for &d in set.iter().filter(|&&d| d != pivot) {
        let e = n / d;
        let touched = reach > 0 && reach == n + 1 - e;
        if touched && f_nonlinear >= reach {
            return None;
        }
        let linear_above = f_nonlinear.max(if touched { (d - 2) * e + 2 } else { 0 });
        equations += (n - e).saturating_sub(linear_above);
        c_active += (1..d).filter(|t| t * e > linear_above).count();
        others.push(Other {
            d,
            e,
            touched,
            linear_above,
        });
    }
    let free_y = (low + free_g).saturating_sub(equations.saturating_sub(c_active));
    let free_y = free_y.min(low + free_g);
    let enumerated = (e0 - 2 - low) + (pivot - 1 - free_g);
    let scale = if p > 2.0 { p - 1.0 } else { 1.0 };
    let mut plan = Plan {
        pivot,
        low,
        free_g,
        others,
        enumerated,
        cost: 0.0,
    };
    let per_item = if plan.nonlinear() {
        1.0 + p.powi(free_y as i32)
    } else {
        1.0
    };
    plan.cost = p.powi(enumerated as i32) / scale * per_item;
    Some(plan)
}

/// Admissible plans from the cheapest estimate up. The estimate counts
/// one check per item for nonlinear plans; the true number is probed later.
fn candidate_plans(n: usize, set: &[usize], p: u32) -> Vec<Plan> {
    let mut plans = Vec::new();
    for &pivot in set {
        let e0 = n / pivot;
        for low in 0..=e0.saturating_sub(2) {
            for free_g in 0..pivot {
                plans.extend(plan_for(n, set, pivot, low, free_g, p as f64));
            }
        }
    }
    plans.sort_by(|a, b| a.cost.total_cmp(&b.cost));
    plans
}

/// One enumerated coefficient of `h` or `g`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
enum Coord {
    H(usize),
    G(usize),
}

struct Orbits {
    coords: Vec<Coord>,
    /// For each leading position: coset representatives and the multiplier.
    leads: Vec<(Vec<u32>, u64)>,
}

fn orbit_setup(zp: &Zp, plan: &Plan, n: usize) -> Orbits {
    let (d0, e0) = (plan.pivot, n / plan.pivot);
    let p = zp.p;
    let order = (p - 1) as i64;
    let weight = |w: i64| w.rem_euclid(order) as u64;
    let mut coords: Vec<(u64, Coord)> = Vec::new();
    for i in plan.low + 1..=e0.saturating_sub(2) {
        coords.push((weight(i as i64 - e0 as i64), Coord::H(i)));
    }
    for j in plan.free_g + 1..d0 {
        coords.push((weight((j as i64 - d0 as i64) * e0 as i64), Coord::G(j)));
    }
    coords.sort_by_key(|&(w, c)| (w.gcd(&(order as u64)), c));
    let leads = coords
        .iter()
        .map(|&(w, _)| {
            // The image of c ↦ c^w and one representative per coset.
            let mut sub = vec![false; p as usize];
            for c in 1..p {
                let mut x = 1u32;
                for _ in 0..w {
                    x = zp.mul(x, c);
                }
                sub[x as usize] = true;
            }
            let members: Vec<u32> = (1..p).filter(|&x| sub[x as usize]).collect();
            let mut covered = vec![false; p as usize];
            let mut reps = Vec::new();
            for x in 1..p {
                if !covered[x as usize] {
                    reps.push(x);
                    for &m in &members {
                        covered[zp.mul(x, m) as usize] = true;
                    }
                }
            }
            (reps, members.len() as u64)
        })
        .collect();
    Orbits {
        coords: coords.into_iter().map(|(_, c)| c).collect(),
        leads,
    }
}

fn orbit_items(orbits: &Orbits, p: u32) -> u128 {
    let k = orbits.coords.len();
    let mut total: u128 = 1;
    for (t, (reps, _)) in orbits.leads.iter().enumerate() {
        let tail = (p as u128).checked_pow((k - 1 - t) as u32).unwrap_or(u128::MAX);
        total = total.saturating_add((reps.len() as u128).saturating_mul(tail));
    }
    total
}

/// `out = a · b`, truncated to the length of `out`.
fn mul_into(zp: &Zp, a: &[u32], b: &[u32], out: &mut [u32]) {
    out.fill(0);
    let len = out.len();
    for (i, &x) in a.iter().enumerate().take(len) {
        if x == 0 {
            continue;
        }
        for (o, &y) in out[i..].iter_mut().zip(b) {
            *o = zp.add(*o, zp.mul(x, y));
        }
    }
}

/// Scratch space for `d`-th roots read off the top of `f`.
struct Root {
    d: usize,
    e: usize,
    d_inv: u32,
    table: Vec<u32>,
    a: Vec<u32>,
    u: Vec<u32>,
}

impl Root {
    fn new(zp: &Zp, d: usize, e: usize) -> Self {
        Root {
            d,
            e,
            d_inv: zp.inv((d as u32) % zp.p),
            table: vec![0; (d + 1) * e],
            a: vec![0; d + 1],
            u: vec![0; e],
        }
    }

    /// Monic original `h` of degree `e` whose `d`-th power matches `f` in
    /// degrees `n-1` down to `n-e+1`.
    fn run(&mut self, zp: &Zp, f: &[u32], h: &mut [u32]) {
        let (d, len) = (self.d, self.e);
        let n = d * len;
        let t = &mut self.table;
        let u = &mut self.u;
        t.fill(0);
        u.fill(0);
        u[0] = 1;
        for j in 0..=d {
            t[j * len] = 1;
        }
        for k in 1..len {
            for j in 1..=d {
                let mut s = self.a[j - 1];
                let prev = &t[(j - 1) * len..j * len];
                for i in 1..k {
                    if u[i] != 0 {
                        s = zp.add(s, zp.mul(u[i], prev[k - i]));
                    }
                }
                self.a[j] = s;
            }
            let uk = zp.mul(zp.sub(f[n - k], self.a[d]), self.d_inv);
            u[k] = uk;
            for j in 1..=d {
                t[j * len + k] = zp.add(self.a[j], zp.mul((j as u32) % zp.p, uk));
            }
        }
        h.fill(0);
        for (k, &c) in u.iter().enumerate() {
            h[len - k] = c;
        }
    }
}

struct OtherWork {
    root: Root,
    h: Vec<u32>,
    /// `h_d^t` for `t = 0..=d`, each of length `n + 1`.
    pows: Vec<Vec<u32>>,
}

impl OtherWork {
    fn refresh(&mut self, zp: &Zp, f: &[u32]) {
        self.root.run(zp, f, &mut self.h);
        for t in 1..self.pows.len() {
            let (done, rest) = self.pows.split_at_mut(t);
            mul_into(zp, &done[t - 1], &self.h, &mut rest[0]);
        }
    }
}

struct Counter<'a> {
    zp: &'a Zp,
    n: usize,
    plan: &'a Plan,
    /// `A^j` for the enumerated part `A` of `h`, `j = 0..=d0`.
    pows: Vec<Vec<u32>>,
    f0: Vec<u32>,
    /// `Σ j g_j A^(j-1)` over the enumerated coefficients of `g`.
    dh: Vec<u32>,
    others: Vec<OtherWork>,
    f: Vec<u32>,
    tmp: Vec<u32>,
    hh: Vec<u32>,
    rows: Vec<Vec<u32>>,
    /// `hist[r] · p^r` summed gives the fiber total.
    hist: Vec<u128>,
    work: u128,
    budget: u128,
}

impl<'a> Counter<'a> {
    fn new(zp: &'a Zp, n: usize, plan: &'a Plan, budget: u128, work: u128) -> Self {
        let unit = |len: usize| {
            let mut v = vec![0u32; len];
            v[0] = 1;
            v
        };
        let others = plan
            .others
            .iter()
            .map(|o| OtherWork {
                root: Root::new(zp, o.d, o.e),
                h: vec![0; o.e + 1],
                pows: (0..=o.d).map(|_| unit(n + 1)).collect(),
            })
            .collect();
        let unknowns = plan.low + plan.free_g + plan.others.iter().map(|o| o.d - 1).sum::<usize>();
        let equations = plan.others.iter().map(|o| n - o.e - o.linear_above.min(n - o.e)).sum();
        Counter {
            zp,
            n,
            plan,
            pows: (0..=plan.pivot).map(|_| unit(n + 1)).collect(),
            f0: vec![0; n + 1],
            dh: vec![0; n + 1],
            others,
            f: vec![0; n + 1],
            tmp: vec![0; n + 1],
            hh: vec![0; n / plan.pivot + 1],
            rows: vec![vec![0; unknowns + 1]; equations],
            hist: Vec::new(),
            work,
            budget,
        }
    }

    /// Solves the linear part for one enumerated vector.
    fn linear(&mut self, h: &[u32], g: &[u32], h_changed: bool) -> Option<Solution> {
        let zp = self.zp;
        let n = self.n;
        let plan = self.plan;
        let (d0, low, free_g) = (plan.pivot, plan.low, plan.free_g);
        if h_changed {
            for j in 1..=d0 {
                let (done, rest) = self.pows.split_at_mut(j);
                mul_into(zp, &done[j - 1], h, &mut rest[0]);
            }
        }
        self.f0.fill(0);
        self.dh.fill(0);
        for j in free_g + 1..=d0 {
            let c = g[j];
            if c == 0 {
                continue;
            }
            for (x, &a) in self.f0.iter_mut().zip(&self.pows[j]) {
                *x = zp.add(*x, zp.mul(c, a));
            }
            if low > 0 {
                let c = zp.mul(c, (j as u32) % zp.p);
                for (x, &a) in self.dh.iter_mut().zip(&self.pows[j - 1]) {
                    *x = zp.add(*x, zp.mul(c, a));
                }
            }
        }
        for w in self.others.iter_mut() {
            w.refresh(zp, &self.f0);
        }

        // Columns: every c_(d,t) first, then the unknowns of h and g.
        let n_c: usize = plan.others.iter().map(|o| o.d - 1).sum();
        let n_y = low + free_g;
        let unknowns = n_c + n_y;
        let (dh, pows) = (&self.dh, &self.pows);
        let column_y = |m: usize, k: usize| -> u32 {
            if k < low {
                if m > k {
                    dh[m - k - 1]
                } else {
                    0
                }
            } else {
                pows[k - low + 1][m]
            }
        };
        let rows = &mut self.rows;
        let mut at = 0;
        let mut offset = 0;
        for (o, w) in plan.others.iter().zip(&self.others) {
            let top = n + 1 - o.e;
            for m in o.linear_above + 1..=n - o.e {
                let row = &mut rows[at];
                at += 1;
                row.fill(0);
                for t in 1..o.d {
                    row[offset + t - 1] = zp.neg(w.pows[t][m]);
                }
                for k in 0..n_y {
                    let mut v = column_y(m, k);
                    if o.touched {
                        v = zp.sub(v, zp.mul(column_y(top, k), w.pows[o.d - 1][m - 1]));
                    }
                    row[n_c + k] = v;
                }
                row[unknowns] = zp.sub(w.pows[o.d][m], self.f0[m]);
            }
            offset += o.d - 1;
        }

        solve(zp, rows, unknowns, plan.nonlinear())
    }

    /// Number of solutions of the linear part that the point checks visit,
    /// or 0 when it has none.
    fn probe(&mut self, h: &[u32], g: &[u32]) -> u128 {
        let n_c: usize = self.plan.others.iter().map(|o| o.d - 1).sum();
        match self.linear(h, g, true) {
            Some(sol) if self.plan.nonlinear() => {
                let r = sol.free.iter().filter(|&&c| c >= n_c).count();
                (self.zp.p as u128).saturating_pow(r as u32)
            }
            _ => 0,
        }
    }

    fn item(&mut self, h: &[u32], g: &[u32], h_changed: bool, mult: u64) -> Result<()> {
        let zp = self.zp;
        let plan = self.plan;
        let n_c: usize = plan.others.iter().map(|o| o.d - 1).sum();
        let unknowns = n_c + plan.low + plan.free_g;
        let Some(sol) = self.linear(h, g, h_changed) else {
            return Ok(());
        };
        if !plan.nonlinear() {
            let r = unknowns - sol.rank;
            if self.hist.len() <= r {
                self.hist.resize(r + 1, 0);
            }
            self.hist[r] += mult as u128;
            return Ok(());
        }

        // The solutions projected to the unknowns of h and g. Kernel vectors
        // of free c columns vanish there because the c columns come first.
        let dirs: Vec<&[u32]> = sol
            .kernel
            .iter()
            .zip(&sol.free)
            .filter(|(_, &col)| col >= n_c)
            .map(|(v, _)| &v[n_c..])
            .collect();
        let r = dirs.len();
        let points = (zp.p as u128).checked_pow(r as u32).unwrap_or(u128::MAX);
        self.work = self.work.saturating_add(points);
        if self.work > self.budget {
            return Err(Error::BudgetExceeded {
                needed: self.work,
                budget: self.budget,
            });
        }
        let mut ok = 0u128;
        let mut digits = vec![0u32; r];
        let mut y = sol.particular[n_c..].to_vec();
        loop {
            if self.point_holds(h, g, &y) {
                ok += 1;
            }
            let mut t = 0;
            while t < r {
                digits[t] += 1;
                for (x, &k) in y.iter_mut().zip(dirs[t]) {
                    *x = zp.add(*x, k);
                }
                if digits[t] < zp.p {
                    break;
                }
                digits[t] = 0;
                t += 1;
            }
            if t == r {
                break;
            }
        }
        if self.hist.is_empty() {
            self.hist.push(0);
        }
        self.hist[0] += ok * mult as u128;
        Ok(())
    }

    /// Rebuilds `f` from the unknowns and tests membership in every other
    /// `D_{n,(d, n/d)}` exactly.
    fn point_holds(&mut self, h: &[u32], g: &[u32], y: &[u32]) -> bool {
        let zp = self.zp;
        let (low, free_g) = (self.plan.low, self.plan.free_g);
        let e0 = self.hh.len() - 1;
        self.hh.copy_from_slice(h);
        self.hh[1..=low].copy_from_slice(&y[..low]);
        // Horner: f = (…(h + g_(d0-1)) h + …) h + g_0.
        self.f.fill(0);
        self.f[0] = 1;
        let mut deg = 0;
        for j in (0..self.plan.pivot).rev() {
            let gj = if j >= 1 && j <= free_g { y[low + j - 1] } else { g[j] };
            mul_into(zp, &self.f[..=deg], &self.hh, &mut self.tmp[..=deg + e0]);
            deg += e0;
            self.f[..=deg].copy_from_slice(&self.tmp[..=deg]);
            self.f[0] = zp.add(self.f[0], gj);
        }
        for (o, w) in self.plan.others.iter().zip(self.others.iter_mut()) {
            w.refresh(zp, &self.f);
            // Peel h_d^t off from the top; what is left must vanish.
            let rest = &mut self.tmp;
            for (x, (&a, &b)) in rest.iter_mut().zip(self.f.iter().zip(&w.pows[o.d])) {
                *x = zp.sub(a, b);
            }
            for t in (1..o.d).rev() {
                let c = rest[t * o.e];
                if c != 0 {
                    for (x, &b) in rest.iter_mut().zip(&w.pows[t]) {
                        *x = zp.sub(*x, zp.mul(c, b));
                    }
                }
            }
            if rest.iter().any(|&x| x != 0) {
                return false;
            }
        }
        true
    }
}

/// Lead blocks with at most this many items get their point checks counted
/// exactly; larger ones are sampled.
const EXACT_BLOCK: u128 = 512;
const SAMPLES: u32 = 32;

/// Calls `visit(h, g, h_changed, multiplier)` once per orbit representative.
fn walk<F>(orbits: &Orbits, n: usize, d0: usize, p: u32, mut visit: F) -> Result<()>
where
    F: FnMut(&[u32], &[u32], bool, u64) -> Result<()>,
{
    let e0 = n / d0;
    let mut h = vec![0u32; e0 + 1];
    h[e0] = 1;
    let mut g = vec![0u32; d0 + 1];
    g[d0] = 1;
    let set_coord = |h: &mut [u32], g: &mut [u32], c: Coord, v: u32| match c {
        Coord::H(i) => h[i] = v,
        Coord::G(j) => g[j] = v,
    };

    visit(&h, &g, true, 1)?;
    for (t, (reps, mult)) in orbits.leads.iter().enumerate() {
        // Coefficients of g vary fastest so the powers of h are reused.
        let mut tail: Vec<Coord> = orbits.coords[t + 1..].to_vec();
        tail.sort_by_key(|c| matches!(c, Coord::H(_)));
        for &r in reps {
            set_coord(&mut h, &mut g, orbits.coords[t], r);
            let mut digits = vec![0u32; tail.len()];
            let mut h_changed = true;
            loop {
                visit(&h, &g, h_changed, *mult)?;
                h_changed = false;
                let mut i = 0;
                while i < digits.len() {
                    digits[i] += 1;
                    let carry = digits[i] == p;
                    if carry {
                        digits[i] = 0;
                    }
                    set_coord(&mut h, &mut g, tail[i], digits[i]);
                    h_changed |= matches!(tail[i], Coord::H(_));
                    if !carry {
                        break;
                    }
                    i += 1;
                }
                if i == digits.len() {
                    break;
                }
            }
        }
        set_coord(&mut h, &mut g, orbits.coords[t], 0);
    }
    Ok(())
}

/// Items plus point checks a plan would take, estimated block by block.
fn work_of(zp: &Zp, n: usize, plan: &Plan, orbits: &Orbits) -> f64 {
    let items = orbit_items(orbits, zp.p);
    if !plan.nonlinear() {
        return items as f64;
    }
    let (d0, e0) = (plan.pivot, n / plan.pivot);
    let mut counter = Counter::new(zp, n, plan, u128::MAX, 0);
    let mut rng = StdRng::seed_from_u64(n as u64);
    let mut h = vec![0u32; e0 + 1];
    h[e0] = 1;
    let mut g = vec![0u32; d0 + 1];
    g[d0] = 1;
    let mut total = 1.0 + counter.probe(&h, &g) as f64;
    let k = orbits.coords.len();
    for (t, (reps, _)) in orbits.leads.iter().enumerate() {
        let tail = &orbits.coords[t + 1..];
        let size = (reps.len() as u128).saturating_mul((zp.p as u128).saturating_pow((k - 1 - t) as u32));
        let exact = size <= EXACT_BLOCK;
        let draws = if exact { size as u32 } else { SAMPLES };
        let mut points = 0u128;
        for s in 0..draws {
            let (lead, mut rest) = if exact {
                (reps[s as usize % reps.len()], s as u64 / reps.len() as u64)
            } else {
                (reps[rng.gen_range(0..reps.len())], 0)
            };
            let mut set = |c: Coord, v: u32| match c {
                Coord::H(i) => h[i] = v,
                Coord::G(j) => g[j] = v,
            };
            set(orbits.coords[t], lead);
            for &c in tail {
                let v = if exact {
                    let v = (rest % zp.p as u64) as u32;
                    rest /= zp.p as u64;
                    v
                } else {
                    rng.gen_range(0..zp.p)
                };
                set(c, v);
            }
            points = points.saturating_add(counter.probe(&h, &g));
        }
        total += size as f64 * (1.0 + points as f64 / draws as f64);
        for &c in &orbits.coords[t..] {
            match c {
                Coord::H(i) => h[i] = 0,
                Coord::G(j) => g[j] = 0,
            }
        }
    }
    total
}

/// The plan with the least measured work.
fn choose_plan(zp: &Zp, n: usize, set: &[usize]) -> (Plan, Orbits) {
    let mut best: Option<(f64, Plan, Orbits)> = None;
    for plan in candidate_plans(n, set, zp.p) {
        let orbits = orbit_setup(zp, &plan, n);
        if best.as_ref().is_some_and(|b| b.0 <= orbit_items(&orbits, zp.p) as f64) {
            continue;
        }
        let cost = work_of(zp, n, &plan, &orbits);
        if best.as_ref().is_none_or(|b| cost < b.0) {
            best = Some((cost, plan, orbits));
        }
    }
    let (_, plan, orbits) = best.expect("the purely enumerated plan is always admissible");
    (plan, orbits)
}

/// `|∩_{d ∈ set} D_{n,(d, n/d)}(F_p)|` for a set of nontrivial divisors of
/// `n`, `p ∤ n`.
pub fn count_divisor_intersection(n: usize, set: &[usize], field: PrimeField, budget: u128) -> Result<BigUint> {
    let p = field.p();
    let mut set: Vec<usize> = set.to_vec();
    set.sort_unstable();
    set.dedup();
    if set.is_empty() || set.iter().any(|&d| d < 2 || d >= n || n % d != 0) {
        return Err(Error::BadArguments(format!(
            "{set:?} are not nontrivial divisors of {n}"
        )));
    }
    if n as u64 % p as u64 == 0 {
        return Err(Error::WildCharacteristic {
            p: p as u64,
            n: n as u64,
        });
    }
    if set.len() == 1 {
        let d = set[0];
        return Ok(BigUint::from(p).pow((d + n / d - 2) as u32));
    }
    let zp = Zp::new(field);
    let (plan, orbits) = choose_plan(&zp, n, &set);
    run_plan(&zp, n, &plan, &orbits, budget)
}

fn run_plan(zp: &Zp, n: usize, plan: &Plan, orbits: &Orbits, budget: u128) -> Result<BigUint> {
    let p = zp.p;
    let items = orbit_items(orbits, p);
    if items > budget {
        return Err(Error::BudgetExceeded { needed: items, budget });
    }
    let mut counter = Counter::new(zp, n, plan, budget, items);
    walk(orbits, n, plan.pivot, p, |h, g, changed, mult| {
        counter.item(h, g, changed, mult)
    })?;

    let pb = BigUint::from(p);
    let mut total = BigUint::default();
    for (r, &c) in counter.hist.iter().enumerate() {
        total += BigUint::from(c) * pb.pow(r as u32);
    }
    Ok(total * pb)
}
