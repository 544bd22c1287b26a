//! Serializable outputs shared by the CLI, the golden file and the acceptance suite.
//!
//! Exact numbers are JSON integers when integral and `"p/q"` strings otherwise;
//! irrational scalars and polynomials are rendered as strings.

use num_rational::BigRational;
use serde::Serialize;
use serde_json::{json, Value};

use crate::branching::{hom_dim, restrict, EmbeddingMap, HDecomposition};
use crate::field::rat;
use crate::forms::lambda11_0;
use crate::lie::{build_space, validate, ReductiveSpaceData, SpaceName};
use crate::obstruction::{
    critical_point_check, integrand_from, killing_check, obstruction_terms, pairing_of, reduce_trace, trace_normal_form,
    verdict_from,
    CoordFrame, NablaHTable, Pairing, RigidityVerdict, VERDICT_SAMPLES,
};
use crate::proto::{delta_data, to_complex_basis};
use crate::rep::{casimir_bruteforce, explicit_rep, Group, IrrepLabel};
use crate::stability::{coindex, matrix_a, mu_values, spectral_case, ExactNumber, StabilityReport};
use crate::{Result, Scalar};

pub const ALL_SPACES: [SpaceName; 3] = [SpaceName::S3xS3, SpaceName::Cp3, SpaceName::Flag];

pub fn exact_rational(q: &BigRational) -> Value {
    serde_json::to_value(ExactNumber(q.clone())).expect("serializable")
}

pub fn exact(s: &Scalar) -> Value {
    match s.to_rational() {
        Some(q) => exact_rational(&q),
        None => Value::String(s.to_string()),
    }
}

fn matrix_json(m: &crate::Mat) -> Value {
    Value::Array((0..m.nrows()).map(|r| Value::Array(m.row(r).iter().map(exact).collect())).collect())
}

fn decomposition_json(d: &HDecomposition) -> Value {
    Value::Array(
        d.parts
            .iter()
            .map(|(l, m)| json!({"h_label": l.to_string(), "mult": m}))
            .collect(),
    )
}

/// One Casimir table row.
#[derive(Clone, Debug, Serialize)]
pub struct CasimirEntry {
    pub group: String,
    pub label: String,
    pub dim: u64,
    pub casimir: ExactNumber,
}

pub fn casimir_rows(space: &ReductiveSpaceData, max: &BigRational) -> Result<Vec<CasimirEntry>> {
    let group = Group::from_space(space);
    group
        .labels_up_to(max)
        .into_iter()
        .map(|(l, c)| {
            Ok(CasimirEntry {
                group: space.group.name().to_string(),
                label: l.to_string(),
                dim: group.dim(&l)?,
                casimir: ExactNumber(c),
            })
        })
        .collect()
}

/// `{gamma, casimir, branching, hom_dim}` for one label.
pub fn branch_entry(space: &ReductiveSpaceData, gamma: &IrrepLabel) -> Result<Value> {
    let group = Group::from_space(space);
    let emb = EmbeddingMap::from_space(space)?;
    let d = restrict(&group, gamma, &emb)?;
    let target = lambda11_0(space)?.decomposition;
    Ok(json!({
        "gamma": gamma.to_string(),
        "casimir": exact_rational(&group.casimir(gamma)?),
        "dim": group.dim(gamma)?,
        "branching": decomposition_json(&d),
        "restricted_dim": d.dim(),
        "hom_dim": hom_dim(&d, &target)?,
    }))
}

pub fn branch_entries(space: &ReductiveSpaceData, max: &BigRational) -> Result<Vec<Value>> {
    Group::from_space(space)
        .labels_up_to(max)
        .iter()
        .map(|(l, _)| branch_entry(space, l))
        .collect()
}

pub fn lambda11_0_entry(space: &ReductiveSpaceData) -> Result<Value> {
    let d = lambda11_0(space)?.decomposition;
    Ok(json!({
        "space": space.name.as_str(),
        "decomposition": decomposition_json(&d),
        "dim": d.dim(),
        "trivial_mult": d.trivial_mult(),
    }))
}

/// Freudenthal versus `−Σ ρ_*(eₐ)²` for every label with explicit matrices and `Cas ≤ max`.
pub fn bruteforce_entries(space: &ReductiveSpaceData, max: &BigRational) -> Result<Vec<Value>> {
    let group = Group::from_space(space);
    let mut out = Vec::new();
    for (l, c) in group.labels_up_to(max) {
        let Ok(rep) = explicit_rep(space, &l) else { continue };
        let brute = casimir_bruteforce(space, &rep)?;
        out.push(json!({
            "label": l.to_string(),
            "freudenthal": exact_rational(&c),
            "bruteforce": exact(&brute),
            "agree": brute == Scalar::rational(c),
        }));
    }
    Ok(out)
}

/// `{gamma, hom_dim, coclosed_dim, delta_matrix}`; δ images are given in the complex basis `m⁺ ⊕ m⁻`.
pub fn delta_entry(space: &ReductiveSpaceData, gamma: &IrrepLabel) -> Result<Value> {
    let d = delta_data(space, gamma)?;
    let matrices: Vec<Value> = d
        .delta
        .iter()
        .map(|f| matrix_json(&to_complex_basis(space, &f.matrix)))
        .collect();
    Ok(json!({
        "space": space.name.as_str(),
        "gamma": gamma.to_string(),
        "hom_dim": d.hom_dim,
        "coclosed_dim": d.coclosed_dim,
        "delta_matrix": matrices,
    }))
}

pub fn spectral_entry(eps: &BigRational) -> Value {
    let a = matrix_a(eps);
    let mu = mu_values(eps).map(|m| {
        json!({
            "mu1": m.mu1.as_ref().map(exact_rational),
            "mu2": m.mu2.as_ref().map(exact_rational),
            "mu3": exact_rational(&m.mu3),
        })
    });
    let rows: Vec<Value> = (0..2)
        .map(|r| Value::Array(a.row(r).iter().map(exact_rational).collect()))
        .collect();
    json!({
        "eps": exact_rational(eps),
        "matrix_a": rows,
        "case": spectral_case(eps),
        "mu": mu,
    })
}

pub fn spectral_points() -> Vec<BigRational> {
    vec![rat(0, 1), rat(3, 4), rat(4, 1), rat(6, 1), rat(25, 4), rat(7, 1)]
}

/// Everything the `obstruction` command prints.
#[derive(Clone, Debug)]
pub struct ObstructionReport {
    pub table: NablaHTable,
    pub i0: crate::obstruction::Poly,
    pub i1: crate::obstruction::Poly,
    pub i2: crate::obstruction::Poly,
    pub integrand: crate::obstruction::Poly,
    pub pairing: Pairing,
    pub verdict: RigidityVerdict,
}

pub fn obstruction_report() -> Result<ObstructionReport> {
    let frame = CoordFrame::default();
    let terms = obstruction_terms(&frame);
    let integrand = integrand_from(&terms, frame.space.einstein);
    let pairing = pairing_of(&integrand)?;
    let verdict = verdict_from(pairing.total.clone(), &critical_point_check(VERDICT_SAMPLES));
    Ok(ObstructionReport {
        table: frame.nabla_h(),
        i0: trace_normal_form(&terms.i0),
        i1: trace_normal_form(&terms.i1),
        i2: trace_normal_form(&terms.i2),
        integrand,
        pairing,
        verdict,
    })
}

impl ObstructionReport {
    pub fn to_json(&self) -> Value {
        let mut table = Vec::new();
        for i in 1..=6 {
            for k in 1..=6 {
                let coeffs: Vec<String> = self.table.entries[i - 1][k - 1].iter().map(|p| p.to_string()).collect();
                table.push(json!({"i": i, "k": k, "coefficients": coeffs}));
            }
        }
        json!({
            "nabla_h": table,
            "i0": self.i0.to_string(),
            "i1": self.i1.to_string(),
            "i2": self.i2.to_string(),
            "integrand": trace_normal_form(&self.integrand).to_string(),
            "pairing": {
                "total": exact(&self.pairing.total),
                "vvv": exact(&self.pairing.vvv),
                "x2v": exact(&self.pairing.x2v),
                "xxx": exact(&self.pairing.xxx),
            },
            "verdict": {
                "pairing_nonzero": self.verdict.pairing_nonzero,
                "critical_points_exist": self.verdict.critical_points_exist,
                "rigid": self.verdict.rigid,
                "summary": self.verdict.summary,
            },
        })
    }

    pub fn to_table(&self) -> String {
        let mut out = String::from("nabla h(e_i, e_k, .)\n");
        for i in 1..=6 {
            for k in 1..=6 {
                out.push_str(&format!("  i={i} k={k}: {}\n", self.table.render(i, k)));
            }
        }
        out.push_str(&format!("I0 = {}\nI1 = {}\nI2 = {}\n", self.i0, self.i1, self.i2));
        out.push_str(&format!("I = {}\n", trace_normal_form(&self.integrand)));
        out.push_str(&format!(
            "subtotals: v1v2v3 {}, x^2 v {}, x^3 {}\n",
            self.pairing.vvv, self.pairing.x2v, self.pairing.xxx
        ));
        out.push_str(&format!("verdict: {}\n", self.verdict.summary));
        out.push_str(&format!("pairing = {}, rigid = {}\n", self.pairing.total, self.verdict.rigid));
        out
    }
}

/// A named internal consistency check.
#[derive(Clone, Debug, Serialize)]
pub struct InvariantCheck {
    pub name: String,
    pub pass: bool,
}

/// The full reproduction run: tables, branchings, δ data, coindices, spectral checks, obstruction.
pub struct Reproduction {
    pub json: Value,
    pub invariants: Vec<InvariantCheck>,
}

impl Reproduction {
    pub fn all_pass(&self) -> bool {
        self.invariants.iter().all(|c| c.pass)
    }
}

fn delta_cases() -> Vec<(SpaceName, Vec<u32>)> {
    vec![
        (SpaceName::S3xS3, vec![1, 1, 0]),
        (SpaceName::Cp3, vec![1, 0]),
        (SpaceName::Cp3, vec![1, 1]),
        (SpaceName::Flag, vec![1, 1]),
    ]
}

pub fn reproduce_all() -> Result<Reproduction> {
    let mut invariants = Vec::new();
    let mut check = |name: String, pass: bool| invariants.push(InvariantCheck { name, pass });
    let max = rat(12, 1);
    let wide = rat(20, 1);

    let mut casimir = Vec::new();
    let mut branching = Vec::new();
    let mut brute = Vec::new();
    let mut lambda = Vec::new();
    let mut reports: Vec<StabilityReport> = Vec::new();
    for name in ALL_SPACES {
        let space = build_space(name);
        let v = validate(&space);
        check(format!("{name}: catalog structure"), v.all_pass());
        let rows = casimir_rows(&space, &wide)?;
        casimir.push(json!({"space": name.as_str(), "group": space.group.name(), "rows": rows}));
        let branches = branch_entries(&space, &wide)?;
        let conserved = branches.iter().all(|b| b["dim"] == b["restricted_dim"]);
        check(format!("{name}: branching preserves dimension"), conserved);
        branching.push(json!({"space": name.as_str(), "rows": branches}));
        let b = bruteforce_entries(&space, &max)?;
        check(
            format!("{name}: brute-force Casimir equals Freudenthal"),
            b.iter().all(|e| e["agree"] == Value::Bool(true)),
        );
        brute.push(json!({"space": name.as_str(), "rows": b}));
        lambda.push(lambda11_0_entry(&space)?);
        let report = coindex(&space)?;
        let consistent = report.spectrum.iter().all(|s| s.coclosed_dim <= s.hom_dim);
        check(format!("{name}: coclosed dimensions bounded by hom dimensions"), consistent);
        reports.push(report);
    }
    let flag_u3 = crate::lie::flag_u3();
    check("flag as U(3)/T³: catalog structure".into(), validate(&flag_u3).all_pass());

    let mut deltas = Vec::new();
    for (name, label) in delta_cases() {
        let space = build_space(name);
        let gamma = IrrepLabel::new(space.group, &label)?;
        let entry = delta_entry(&space, &gamma)?;
        let group = Group::from_space(&space);
        let predicted = hom_dim(
            &restrict(&group, &gamma, &EmbeddingMap::from_space(&space)?)?,
            &lambda11_0(&space)?.decomposition,
        )?;
        check(
            format!("{name} {gamma}: explicit hom space matches branching count"),
            entry["hom_dim"] == json!(predicted),
        );
        deltas.push(entry);
    }

    let spectral: Vec<Value> = spectral_points().iter().map(spectral_entry).collect();

    let obstruction = obstruction_report()?;
    check("nabla h symmetric in its last two slots".into(), obstruction.table.is_symmetric());
    let reduced_pairing = pairing_of(&reduce_trace(&obstruction.integrand))?;
    check(
        "pairing independent of the trace representative".into(),
        reduced_pairing.total == obstruction.pairing.total,
    );
    check(
        "pairing subtotals add up".into(),
        &(&obstruction.pairing.vvv + &obstruction.pairing.x2v) + &obstruction.pairing.xxx == obstruction.pairing.total,
    );
    let killing = [[1, -1, 0], [2, -1, -1], [0, 0, 0]];
    let killing_json: Vec<Value> = killing
        .iter()
        .map(|t| {
            let ok = killing_check([rat(t[0], 1), rat(t[1], 1), rat(t[2], 1)]).unwrap_or(false);
            json!({"t": t, "killing": ok})
        })
        .collect();
    check(
        "canonical variations satisfy the Killing equation".into(),
        killing_json.iter().all(|k| k["killing"] == Value::Bool(true)),
    );

    let json = json!({
        "casimir": casimir,
        "casimir_bruteforce": brute,
        "branching": branching,
        "lambda11_0": lambda,
        "delta": deltas,
        "coindex": reports,
        "spectral": spectral,
        "obstruction": obstruction.to_json(),
        "killing": killing_json,
        "invariants": invariants,
    });
    Ok(Reproduction { json, invariants })
}
