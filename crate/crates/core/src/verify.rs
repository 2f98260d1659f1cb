//! Verification suites run against a fixture, producing serializable reports.

use std::fmt;
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use serde_json::{json, Value};

use crate::clifford::{trace_form, CliffordAlgebra, CliffordElement, GroupElement, Parity};
use crate::error::{Error, Result};
use crate::exactalg::{int, is_zero_vector, unit_vector, vec_add, vec_scale, Mat, Rat, Vector};
use crate::fixtures::Fixture;
use crate::homalg::{
    b_is_unique, cohomology_table, companion_identity_holds, hilbert_cross_check, hom_space, irreducibility_check,
    is_isomorphic, module_hom_dim, sheaf_numerics, simplicity_verdict, submodule_closure, Irreducibility,
    IsoVerdict, WINDOW,
};
use crate::quadform::{QuadraticSpace, Subspace};
use crate::spinor::{
    cone_compare, drop_vector, equivariance_check, family_indicator, flag_sequence, recover_intersection_with_radical,
    restrict_compare, HalfKilled, IdealModule, MatrixFactorization,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Status {
    Pass,
    Fail,
    Undecided,
}

impl Status {
    fn of(ok: bool) -> Status {
        if ok {
            Status::Pass
        } else {
            Status::Fail
        }
    }
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
            Status::Undecided => "UNDECIDED",
        })
    }
}

/// One verdict: `{"op", "verdict", "certificate", "dims", "status"}`.
#[derive(Debug, Clone, Serialize)]
pub struct Record {
    pub op: String,
    pub verdict: String,
    pub certificate: Value,
    pub dims: Value,
    pub status: Status,
}

impl Record {
    pub fn new(op: &str, verdict: impl Into<String>, status: Status) -> Self {
        Record { op: op.to_string(), verdict: verdict.into(), certificate: Value::Null, dims: Value::Null, status }
    }

    pub fn check(op: &str, verdict: impl Into<String>, ok: bool) -> Self {
        Record::new(op, verdict, Status::of(ok))
    }

    pub fn certificate(mut self, c: Value) -> Self {
        self.certificate = c;
        self
    }

    pub fn dims(mut self, d: Value) -> Self {
        self.dims = d;
        self
    }

    fn error(op: &str, e: &Error) -> Self {
        Record::new(op, "ERROR", Status::Fail).certificate(json!(e.to_string()))
    }
}

impl fmt::Display for Record {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:<9} {}: {}", self.status, self.op, self.verdict)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Suite {
    All,
    Construction,
    Dependence,
    Dual,
    Sections,
    StabilityNumerics,
}

impl Suite {
    pub const NAMES: [&'static str; 6] =
        ["all", "construction", "dependence", "dual", "sections", "stability-numerics"];

    pub fn name(self) -> &'static str {
        match self {
            Suite::All => "all",
            Suite::Construction => "construction",
            Suite::Dependence => "dependence",
            Suite::Dual => "dual",
            Suite::Sections => "sections",
            Suite::StabilityNumerics => "stability-numerics",
        }
    }

    fn includes(self, other: Suite) -> bool {
        self == Suite::All || self == other
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Suite> {
        Ok(match s {
            "all" => Suite::All,
            "construction" => Suite::Construction,
            "dependence" => Suite::Dependence,
            "dual" => Suite::Dual,
            "sections" => Suite::Sections,
            "stability-numerics" => Suite::StabilityNumerics,
            _ => return Err(Error::Precondition(format!("unknown suite {s:?}; expected one of {:?}", Suite::NAMES))),
        })
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct Report {
    pub fixture: String,
    pub suite: String,
    pub seed: u64,
    pub strict: bool,
    pub records: Vec<Record>,
    pub overall: Status,
}

impl Report {
    pub fn new(fixture: &str, suite: Suite, seed: u64, strict: bool, records: Vec<Record>) -> Self {
        let ok = records
            .iter()
            .all(|r| r.status == Status::Pass || (!strict && r.status == Status::Undecided));
        Report {
            fixture: fixture.to_string(),
            suite: suite.name().to_string(),
            seed,
            strict,
            records,
            overall: Status::of(ok),
        }
    }

    pub fn passed(&self) -> bool {
        self.overall == Status::Pass
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    /// Human-readable form, one line per record.
    pub fn render(&self) -> String {
        let mut out = format!("fixture {} suite {} seed {}\n", self.fixture, self.suite, self.seed);
        for r in &self.records {
            out.push_str(&r.to_string());
            out.push('\n');
        }
        out.push_str(&format!("overall {}\n", self.overall));
        out
    }
}

/// Run the selected suite on a fixture.
///
/// Errors raised by the fixture's own requests (flag, section, cone) are input
/// errors and propagate; everything else becomes a failing record.
pub fn verify_fixture(fx: &Fixture, suite: Suite, seed: u64, strict: bool) -> Result<Report> {
    let module = IdealModule::build(&fx.space, &fx.w)?;
    let mut records = Vec::new();
    if suite.includes(Suite::Construction) {
        construction(fx, &module, seed, &mut records);
    }
    if suite.includes(Suite::Dependence) {
        dependence(fx, &module, seed, &mut records)?;
    }
    if suite.includes(Suite::Dual) {
        dual(&module, seed, &mut records);
    }
    if suite.includes(Suite::Sections) {
        sections(fx, &module, &mut records)?;
    }
    if suite.includes(Suite::StabilityNumerics) {
        stability_numerics(&module, &mut records);
    }
    Ok(Report::new(&fx.label, suite, seed, strict, records))
}

fn push(records: &mut Vec<Record>, op: &str, r: Result<Record>) {
    records.push(r.unwrap_or_else(|e| Record::error(op, &e)));
}

fn codim(module: &IdealModule) -> usize {
    module.w().codim()
}

fn base_dims(module: &IdealModule) -> Value {
    json!({
        "n": module.space().dim(),
        "rank": module.space().rank(),
        "dim_w": module.w().dim(),
        "codim_w": codim(module),
        "N": module.size(),
    })
}

/// `dim pi(W) = rank / 2`, which requires the rank to be even.
fn pi_w_maximal_even(module: &IdealModule) -> bool {
    let space = module.space();
    let wk = module.w().intersect(&space.radical());
    space.rank() % 2 == 0 && 2 * (module.w().dim() - wk.dim()) == space.rank()
}

// ---------------------------------------------------------------- construction

fn construction(fx: &Fixture, module: &IdealModule, seed: u64, records: &mut Vec<Record>) {
    let c = codim(module);
    let expected = 1usize << (c - 1);
    let sizes_ok = module.ev_basis().len() == expected && module.odd_basis().len() == expected;
    let in_ideal = module.ev_basis().iter().chain(module.odd_basis()).all(|x| module.contains(x));
    records.push(
        Record::check("build_ideal", format!("N = {}", module.size()), sizes_ok && in_ideal)
            .certificate(json!({
                "generator": module.generator().to_string(),
                "expected_N": expected,
                "basis_in_ideal": in_ideal,
            }))
            .dims(base_dims(module)),
    );

    let twice = module.shift().shift();
    let swapped = module.shift().ev_basis() == module.odd_basis();
    let involution = twice.ev_basis() == module.ev_basis() && twice.odd_basis() == module.odd_basis();
    records.push(Record::check("shift", "involution swapping halves", swapped && involution));

    let mf = module.factorization();
    let defect = mf.identity_defect();
    let mut rec = Record::check(
        "build_factorization",
        match defect {
            None => "phi psi = psi phi = q Id".to_string(),
            Some((which, i, j)) => format!("{which} differs from q Id at x{i} x{j}"),
        },
        defect.is_none(),
    )
    .dims(json!({ "N": mf.size(), "coefficient_products": 2 * mf.n() * mf.n() }));
    if mf.size() <= 4 {
        rec = rec.certificate(json!({ "phi": mf.phi().render(), "psi": mf.psi().render() }));
    }
    records.push(rec);

    push(records, "generator_rescaling", generator_rescaling(module));
    push(records, "fiber_rank", fiber_ranks(fx, &mf, seed));

    let recovered = recover_intersection_with_radical(module);
    let expected_wk = module.w().intersect(&module.space().radical());
    records.push(
        Record::check(
            "recover_intersection_with_radical",
            format!("dim V ∩ Ann(I) = {}", recovered.dim()),
            recovered.same_as(&expected_wk),
        )
        .certificate(json!({ "basis": recovered.basis() }))
        .dims(json!({ "dim_w_cap_k": expected_wk.dim() })),
    );
}

/// Rebuild `I` from a second basis of `W` related by a matrix of determinant 2.
fn generator_rescaling(module: &IdealModule) -> Result<Record> {
    let basis = module.w().basis();
    let mut alt: Vec<Vector> = basis.to_vec();
    alt[0] = vec_scale(&basis[0], &int(2));
    if basis.len() > 1 {
        alt[0] = vec_add(&alt[0], &basis[1]);
    }
    let other = IdealModule::new(module.algebra(), &Subspace::new(module.space().dim(), alt)?)?;
    let scaled = module.generator().scale(&int(2)) == *other.generator();
    let same = other.ev_basis().iter().chain(other.odd_basis()).all(|x| module.contains(x))
        && module.ev_basis().iter().chain(module.odd_basis()).all(|x| other.contains(x));
    Ok(Record::check("generator_rescaling", "generator scales by det = 2; same ideal", scaled && same)
        .certificate(json!({ "generator": other.generator().to_string() })))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Stratum {
    WCapK,
    Elsewhere,
}

/// Points of `Q`: basis vectors, `e_i ± e_j`, isotropic points on random lines,
/// and random points of `W ∩ K` and of `W`.
fn quadric_samples(space: &QuadraticSpace, w: &Subspace, seed: u64) -> Vec<Vector> {
    let n = space.dim();
    let mut pts: Vec<Vector> = Vec::new();
    let keep = |v: Vector, pts: &mut Vec<Vector>| {
        if !is_zero_vector(&v) && space.q(&v).is_zero() {
            pts.push(v);
        }
    };
    for i in 0..n {
        keep(unit_vector(n, i), &mut pts);
    }
    for i in 0..n {
        for j in i + 1..n {
            let (a, b) = (unit_vector(n, i), unit_vector(n, j));
            keep(vec_add(&a, &b), &mut pts);
            keep(vec_add(&a, &vec_scale(&b, &int(-1))), &mut pts);
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let random = |rng: &mut ChaCha8Rng| -> Vector { (0..n).map(|_| Rat::from(rng.gen_range(-3i64..=3))).collect() };
    let mut found = 0;
    for _ in 0..64 {
        if found == 8 {
            break;
        }
        let (x, y) = (random(&mut rng), random(&mut rng));
        if let Some(v) = space.isotropic_on_line(&x, &y) {
            found += 1;
            keep(v, &mut pts);
        }
    }
    let wk = w.intersect(&space.radical());
    for sub in [&wk, w] {
        if sub.is_zero() {
            continue;
        }
        for _ in 0..3 {
            let c: Vec<Rat> = (0..sub.dim()).map(|_| Rat::from(rng.gen_range(-3i64..=3))).collect();
            let v = crate::exactalg::combine(n, &c, sub.basis());
            keep(v, &mut pts);
        }
    }
    pts
}

fn fiber_ranks(fx: &Fixture, mf: &MatrixFactorization, seed: u64) -> Result<Record> {
    let space = &fx.space;
    let c = fx.w.codim();
    let wk = fx.w.intersect(&space.radical());
    let pts = quadric_samples(space, &fx.w, seed);
    let mut failures: Vec<Value> = Vec::new();
    if c == 1 {
        // 1x1 factorization: the fiber is 1 exactly on the hyperplane phi = 0.
        let form: Vector = mf.phi().coeff().iter().map(|m| m[(0, 0)].clone()).collect();
        let support = Subspace::span(space.dim(), &Mat::from_rows(vec![form])?.kernel());
        let component = space.check_isotropic(&support)? && support.dim() + 1 == space.dim();
        for v in &pts {
            let (_, fiber) = mf.fiber_rank(v)?;
            if fiber != usize::from(support.contains(v)) {
                failures.push(json!({ "point": v, "fiber": fiber }));
            }
        }
        let on = if support.same_as(&fx.w) { "PW" } else { "the other component" };
        return Ok(Record::check(
            "fiber_rank",
            format!("codim 1: fiber 1 on {on}, 0 off it"),
            component && failures.is_empty(),
        )
        .certificate(json!({ "support": support.basis(), "support_is_w": support.same_as(&fx.w), "failures": failures }))
        .dims(json!({ "points": pts.len() })));
    }
    let (mut n_wk, mut n_else) = (0, 0);
    for v in &pts {
        let stratum = if wk.contains(v) { Stratum::WCapK } else { Stratum::Elsewhere };
        let expected = match stratum {
            Stratum::WCapK => {
                n_wk += 1;
                1usize << (c - 1)
            }
            Stratum::Elsewhere => {
                n_else += 1;
                1usize << (c - 2)
            }
        };
        let (_, fiber) = mf.fiber_rank(v)?;
        if fiber != expected {
            failures.push(json!({ "point": v, "fiber": fiber, "expected": expected }));
        }
    }
    Ok(Record::check(
        "fiber_rank",
        format!("fiber {} on PW ∩ PK, {} elsewhere on Q", 1usize << (c - 1), 1usize << (c - 2)),
        failures.is_empty(),
    )
    .certificate(json!({ "failures": failures }))
    .dims(json!({ "points": pts.len(), "on_w_cap_k": n_wk, "elsewhere": n_else })))
}

// ---------------------------------------------------------------- dependence

fn iso_record(op: &str, v: &IsoVerdict, expected_iso: bool) -> Record {
    let status = match v {
        IsoVerdict::Undecided { .. } => Status::Undecided,
        _ => Status::of(v.is_iso() == expected_iso),
    };
    Record::new(op, v.name(), status)
        .certificate(serde_json::to_value(v).expect("verdict serializes"))
        .dims(json!({ "expected": if expected_iso { "ISO" } else { "NOT_ISO" } }))
}

/// Anisotropic, pairwise independent vectors among `e_i`, `e_i ± e_j`, `e_i + 2 e_j`.
pub fn anisotropic_vectors(space: &QuadraticSpace, count: usize) -> Vec<Vector> {
    let n = space.dim();
    let mut candidates: Vec<Vector> = (0..n).map(|i| unit_vector(n, i)).collect();
    for i in 0..n {
        for j in i + 1..n {
            let (a, b) = (unit_vector(n, i), unit_vector(n, j));
            for s in [int(1), int(-1), int(2)] {
                candidates.push(vec_add(&a, &vec_scale(&b, &s)));
            }
        }
    }
    let mut out: Vec<Vector> = Vec::new();
    for v in candidates {
        if out.len() == count {
            break;
        }
        if space.q(&v).is_zero() {
            continue;
        }
        if out.iter().all(|u| Mat::from_rows(vec![u.clone(), v.clone()]).expect("rows").rank() == 2) {
            out.push(v);
        }
    }
    out
}

/// The empty product, two products of two vectors, and a single vector.
pub fn sample_group_elements(space: &QuadraticSpace) -> Vec<Vec<Vector>> {
    let a = anisotropic_vectors(space, 3);
    let mut out = vec![Vec::new()];
    if a.len() >= 2 {
        out.push(vec![a[0].clone(), a[1].clone()]);
    }
    if a.len() >= 3 {
        out.push(vec![a[1].clone(), a[2].clone()]);
    }
    if let Some(v) = a.first() {
        out.push(vec![v.clone()]);
    }
    out
}

fn dependence(fx: &Fixture, module: &IdealModule, seed: u64, records: &mut Vec<Record>) -> Result<()> {
    let mf = module.factorization();
    let shifted = module.shift().factorization();
    let maximal = pi_w_maximal_even(module);
    push(
        records,
        "is_isomorphic(I, I[1])",
        is_isomorphic(&mf, &shifted, seed).map(|v| iso_record("is_isomorphic(I, I[1])", &v, !maximal)),
    );
    if maximal {
        let r = (|| -> Result<Record> {
            let a = family_indicator(&mf)?;
            let b = family_indicator(&shifted)?;
            let ok = a != HalfKilled::None && b != HalfKilled::None && a != b;
            Ok(Record::check("family_indicator", format!("I: {a:?}, I[1]: {b:?}"), ok))
        })();
        push(records, "family_indicator", r);
    }

    for factors in sample_group_elements(&fx.space) {
        let op = "equivariance_check";
        let r = (|| -> Result<Record> {
            let g = GroupElement::new(module.algebra(), factors.clone())?;
            let v = equivariance_check(module, &g)?;
            Ok(Record::check(
                op,
                format!("{} factor(s), {}", v.factors, if v.odd { "compared with I'[1]" } else { "compared with I'" }),
                v.holds(),
            )
            .certificate(serde_json::to_value(&v).expect("serializes"))
            .dims(json!({ "factors": factors })))
        })();
        push(records, op, r);
    }

    push(records, "full_faithfulness", full_faithfulness(&mf, &shifted));

    if let Some(drop) = &fx.flag_drop {
        let w_prime = drop_vector(&fx.w, drop)?;
        let flag = flag_sequence(&fx.space, &w_prime, drop)?;
        let v = &flag.verdict;
        let outer = flag.outer.factorization();
        let mut dims = json!({
            "inner_N": flag.inner.size(),
            "outer_N": flag.outer.size(),
            "end_outer": hom_space(&outer, &outer)?.dim(),
        });
        let mut direct_sum = None;
        if v.split_by_radical {
            let inner = flag.inner.factorization();
            let sum = inner.direct_sum(&inner.shifted())?;
            dims["end_inner_plus_shift"] = json!(hom_space(&sum, &sum)?.dim());
            let op = "direct_sum: I_W' vs I ⊕ I[1]";
            direct_sum = Some(is_isomorphic(&outer, &sum, seed).map(|iv| iso_record(op, &iv, true)));
        }
        records.push(
            Record::check("flag_sequence", if v.split_by_radical { "SPLIT" } else { "NON_SPLIT" }, v.exact && v.agree())
                .certificate(serde_json::to_value(v).expect("serializes"))
                .dims(dims),
        );
        if let Some(r) = direct_sum {
            push(records, "direct_sum", r);
        }
    }
    Ok(())
}

fn full_faithfulness(mf: &MatrixFactorization, shifted: &MatrixFactorization) -> Result<Record> {
    let mut dims = Vec::new();
    let mut ok = b_is_unique(mf) && b_is_unique(shifted);
    for (name, a, b) in [("I,I", mf, mf), ("I,I[1]", mf, shifted), ("I[1],I", shifted, mf)] {
        let hom = hom_space(a, b)?;
        let graded = module_hom_dim(a, b)?;
        let companion = companion_identity_holds(a, b, &hom);
        ok &= hom.dim() == graded && companion;
        dims.push(json!({ "pair": name, "hom_ab": hom.dim(), "graded_module": graded, "companion": companion }));
    }
    Ok(Record::check("full_faithfulness", "Hom via (A,B) = graded module maps", ok).dims(Value::Array(dims)))
}

// ---------------------------------------------------------------- dual

fn dual(module: &IdealModule, seed: u64, records: &mut Vec<Record>) {
    let mf = module.factorization();
    let d = mf.dual();
    let twice = d.dual();
    records.push(Record::check(
        "dual_factorization",
        "transposed pair is a factorization; transposing twice is the identity",
        d.identity_holds() && twice.phi() == mf.phi() && twice.psi() == mf.psi(),
    ));
    let odd = codim(module) % 2 == 1;
    let target = if odd { mf.clone() } else { mf.shifted() };
    let op = if odd { "dual_equivalence (codim odd: S)" } else { "dual_equivalence (codim even: T)" };
    push(records, op, is_isomorphic(&d, &target, seed).map(|v| iso_record(op, &v, true)));
    if module.space().dim() <= 6 {
        push(records, "trace_pairing", trace_pairing(module.algebra()));
        push(records, "trace_annihilator", trace_annihilator(module));
    }
}

/// Nondegeneracy of `tr(xi eta)` on `Cl`, and the observed sign in `tr(v xi) = ± tr(xi v)`.
fn trace_pairing(alg: &std::sync::Arc<CliffordAlgebra>) -> Result<Record> {
    let size = alg.size();
    let mono: Vec<CliffordElement> =
        (0..size as u32).map(|m| CliffordElement::monomial(alg, m, Rat::one())).collect();
    let mut gram = Mat::zeros(size, size);
    for (i, a) in mono.iter().enumerate() {
        for (j, b) in mono.iter().enumerate() {
            gram[(i, j)] = trace_form(a, Some(b))?;
        }
    }
    let nondegenerate = gram.rank() == size;
    let mut signs: [Option<i64>; 2] = [None, None];
    let mut consistent = true;
    for i in 0..alg.n() {
        let v = CliffordElement::monomial(alg, 1 << i, Rat::one());
        for x in &mono {
            let (l, r) = (trace_form(&v, Some(x))?, trace_form(x, Some(&v))?);
            if l.is_zero() && r.is_zero() {
                continue;
            }
            let s = if l == r {
                1
            } else if l == -r.clone() {
                -1
            } else {
                consistent = false;
                continue;
            };
            let slot = usize::from(x.parity() == Some(Parity::Odd));
            match signs[slot] {
                None => signs[slot] = Some(s),
                Some(t) if t != s => consistent = false,
                _ => {}
            }
        }
    }
    Ok(Record::check("trace_pairing", format!("rank {} of {size}", gram.rank()), nondegenerate && consistent)
        .certificate(json!({ "sign_even_xi": signs[0], "sign_odd_xi": signs[1] })))
}

/// `{xi : w_1...w_m xi = 0}` equals `{xi : tr(xi eta w_1...w_m) = 0 for all eta}`.
fn trace_annihilator(module: &IdealModule) -> Result<Record> {
    let alg = module.algebra();
    let size = alg.size();
    let g = module.generator();
    let mono: Vec<CliffordElement> =
        (0..size as u32).map(|m| CliffordElement::monomial(alg, m, Rat::one())).collect();
    let left_cols: Vec<Vector> = mono.iter().map(|x| Ok(g.mul(x)?.to_dense())).collect::<Result<_>>()?;
    let ann_gen = Mat::from_columns(size, &left_cols).kernel();
    let eta_g: Vec<CliffordElement> = mono.iter().map(|eta| eta.mul(g)).collect::<Result<_>>()?;
    let mut m = Mat::zeros(size, size);
    for (c, x) in mono.iter().enumerate() {
        for (r, y) in eta_g.iter().enumerate() {
            m[(r, c)] = trace_form(x, Some(y))?;
        }
    }
    let ann_tr = m.kernel();
    let same = Subspace::span(size, &ann_gen).same_as(&Subspace::span(size, &ann_tr));
    Ok(Record::check("trace_annihilator", "generator and tr|I have the same annihilator", same)
        .dims(json!({ "dim_annihilator": ann_gen.len(), "dim_cl": size })))
}

// ---------------------------------------------------------------- sections

fn default_hyperplane(w: &Subspace) -> Option<Subspace> {
    let n = w.ambient();
    (0..n).find(|&j| w.basis().iter().any(|v| !v[j].is_zero())).map(|j| {
        let idx: Vec<usize> = (0..n).filter(|&i| i != j).collect();
        Subspace::coordinate(n, &idx)
    })
}

fn sections(fx: &Fixture, module: &IdealModule, records: &mut Vec<Record>) -> Result<()> {
    let n = fx.space.dim();
    let mut restrictions: Vec<Subspace> = vec![Subspace::full(n)];
    match &fx.section_subspace {
        Some(u) => restrictions.push(u.clone()),
        None => restrictions.extend(default_hyperplane(&fx.w)),
    }
    for u in restrictions {
        let v = restrict_compare(module, &u)?;
        records.push(
            Record::check(
                "restrict_compare",
                format!(
                    "I' ≅ I[{}] as Cl(U)-modules; {}{}",
                    v.codim_u,
                    match v.kind {
                        crate::spinor::RestrictionKind::MatchesS => "S' ≅ S|Q'",
                        crate::spinor::RestrictionKind::MatchesT => "S' ≅ T|Q'",
                    },
                    if v.reduces_to_free { " (W ∩ U = 0: free module)" } else { "" }
                ),
                v.map.holds(),
            )
            .certificate(serde_json::to_value(&v).expect("serializes"))
            .dims(json!({ "dim_u": u.dim() })),
        );
    }
    let wk = fx.w.intersect(&fx.space.radical());
    let mut cones: Vec<Subspace> = vec![Subspace::zero(n)];
    match &fx.cone_mod {
        Some(u) => cones.push(u.clone()),
        None => {
            if let Some(v) = wk.basis().first() {
                cones.push(Subspace::new(n, vec![v.clone()])?);
            }
        }
    }
    for u in cones {
        let v = cone_compare(module, &u)?;
        records.push(
            Record::check(
                "cone_compare",
                format!(
                    "I' ≅ I[{}]; pullback matches {}",
                    v.dim_u,
                    if v.dim_u % 2 == 0 { "S" } else { "T" }
                ),
                v.map.holds(),
            )
            .certificate(serde_json::to_value(&v).expect("serializes")),
        );
    }
    Ok(())
}

// ---------------------------------------------------------------- stability and numerics

fn stability_numerics(module: &IdealModule, records: &mut Vec<Record>) {
    push(
        records,
        "simplicity_verdict",
        simplicity_verdict(module).map(|v| {
            Record::check(
                "simplicity_verdict",
                format!("{} (predicted {})", v.computed.name(), v.predicted.name()),
                v.agrees(),
            )
            .certificate(json!({ "case": v.case }))
            .dims(json!({ "end": v.end_dim }))
        }),
    );

    let w_maximal = {
        let space = module.space();
        let k = space.radical();
        let wk = module.w().intersect(&k);
        wk.dim() == k.dim() && 2 * (module.w().dim() - wk.dim()) + space.rank() % 2 == space.rank()
    };
    push(
        records,
        "irreducibility_check",
        irreducibility_check(module).map(|v| {
            let status = match &v {
                Irreducibility::Undecided { .. } => Status::Undecided,
                Irreducibility::Irreducible { .. } => Status::of(w_maximal),
                Irreducibility::Reducible { .. } => Status::of(!w_maximal),
            };
            Record::new("irreducibility_check", v.name(), status)
                .certificate(serde_json::to_value(&v).expect("serializes"))
                .dims(json!({ "w_maximal": w_maximal }))
        }),
    );

    push(
        records,
        "submodule_closure",
        submodule_closure(module, module.generator()).map(|c| {
            Record::check("submodule_closure", format!("closure of generator has dim {}", c.dim()), c.is_everything())
                .dims(json!({ "ev": c.ev_dim, "odd": c.odd_dim }))
        }),
    );

    let mf = module.factorization();
    let s = sheaf_numerics(&mf);
    let c = codim(module);
    let numerics_ok = if c == 1 {
        s.torsion
    } else {
        let expected_rank = Rat::from(1i64 << (c - 2));
        s.rank.as_ref() == Some(&expected_rank) && s.slope.as_ref() == Some(&Rat::one())
    };
    let verdict = match &s.slope {
        Some(m) => format!("rank {}, degree {}, slope {m}", s.rank.clone().unwrap(), s.degree.clone().unwrap()),
        None => "torsion".to_string(),
    };
    records.push(
        Record::check("sheaf_numerics", verdict, numerics_ok)
            .certificate(serde_json::to_value(&s).expect("serializes"))
            .dims(json!({ "codim_w": c })),
    );
    push(
        records,
        "hilbert_polynomial",
        hilbert_cross_check(&mf).map(|ok| Record::check("hilbert_polynomial", s.hilbert.clone(), ok)),
    );
    push(
        records,
        "cohomology_table",
        cohomology_table(&mf, WINDOW).map(|rows| {
            let euler = rows.iter().all(|r| r.consistent());
            let acm = rows.iter().all(|r| r.intermediate_vanish());
            let table: Vec<Value> = rows.iter().map(|r| json!({ "t": r.t, "h": r.h })).collect();
            Record::check(
                "cohomology_table",
                format!("t in [{}, {}]: Euler sums match, intermediate h^i = 0", WINDOW.0, WINDOW.1),
                euler && acm,
            )
            .certificate(json!({ "euler_consistent": euler, "intermediate_vanish": acm, "table": table }))
            .dims(json!({ "dim_q": mf.n() - 2 }))
        }),
    );
}
