use serde_json::{json, Value};

use altchar::characters::{an_character, character_table_an_bounded, DEFAULT_TABLE_BOUND};
use altchar::classification::{
    an_invariant_obstruction, sn_invariant_obstruction, swanson_exception_list,
    swanson_exceptions_as_printed, unisingular_an, unisingular_sn,
};
use altchar::combinatorics::{cycle_order, CycleTypeData};
use altchar::global::{global_brute_force_report, is_global_class, BruteForceLimits};
use altchar::multiplicity::{
    an_multiplicity, an_multiplicity_vector, bias, bias_vector, is_biased_pair, power_conjugacy,
    sn_multiplicity, sn_multiplicity_vector, BiasResult,
};
use altchar::number_theory::jacobi;
use altchar::verify::{run_all, Tier};
use altchar::{AnClass, AnIrrep, Error, Partition, Result};

use crate::output::OutputRecord;
use crate::{Command, Group, TierArg};

pub const CLOSED_FORM_BOUND: usize = 30;

pub struct Options {
    pub unsafe_bounds: bool,
    pub timing: bool,
}

pub struct Outcome {
    pub record: OutputRecord,
    /// A verification ran and failed.
    pub failed: bool,
}

fn guard(opts: &Options, what: &'static str, n: usize, bound: usize) -> Result<()> {
    if n > bound && !opts.unsafe_bounds {
        return Err(Error::BoundExceeded { what, n, bound });
    }
    Ok(())
}

fn partition(s: &str) -> Result<Partition> {
    if s.contains(':') {
        return Err(Error::InvalidLabel(format!(
            "{s:?}: split tags only apply to alternating-group labels"
        )));
    }
    let p: Partition = s.parse()?;
    if p.is_empty() {
        return Err(Error::InvalidPartition(format!("{s:?} is empty")));
    }
    Ok(p)
}

fn record(command: &'static str, inputs: Value, results: Value, provenance: &str) -> Outcome {
    Outcome {
        record: OutputRecord {
            command,
            inputs,
            results,
            provenance: provenance.to_string(),
            timing_ms: None,
        },
        failed: false,
    }
}

const SN_ENGINE: &str = "a_i = (1/m) Σ_j χ_λ(w^j) ζ_m^(-ij), terms grouped by gcd(j, m) into \
     Ramanujan sums; characters by the Murnaghan–Nakayama rule";
const PAIRING: &str = "class :+ contains the standard representative (cycles on consecutive \
     points); irrep :+ takes the value (ε + √(εM))/2 on class :+";

pub fn dispatch(cmd: &Command, opts: &Options) -> Result<Outcome> {
    match cmd {
        Command::Eigmult {
            group,
            irrep,
            class,
            i,
        } => eigmult(*group, irrep, class, *i, opts),
        Command::Bias { mu, i } => bias_cmd(mu, *i, opts),
        Command::Invariant {
            group,
            irrep,
            class,
        } => invariant(*group, irrep, class, opts),
        Command::Unisingular { group, irrep } => unisingular(*group, irrep, opts),
        Command::Swanson { n, as_printed } => swanson(*n, *as_printed, opts),
        Command::PowerConj { mu, i } => power_conj(mu, *i, opts),
        Command::Global { mu, verify } => global(mu, *verify, opts),
        Command::Chartable { n } => chartable(*n, opts),
        Command::Selftest { tier } => selftest(*tier, opts),
    }
}

fn eigmult(
    group: Group,
    irrep: &str,
    class: &str,
    i: Option<i64>,
    opts: &Options,
) -> Result<Outcome> {
    let (irrep_label, class_label, order, provenance) = match group {
        Group::Sn => {
            let (lam, mu) = (partition(irrep)?, partition(class)?);
            guard(
                opts,
                "closed-form multiplicities",
                lam.size(),
                CLOSED_FORM_BOUND,
            )?;
            (
                lam.to_string(),
                mu.to_string(),
                cycle_order(&mu),
                SN_ENGINE.to_string(),
            )
        }
        Group::An => {
            let (v, c): (AnIrrep, AnClass) = (irrep.parse()?, class.parse()?);
            guard(
                opts,
                "closed-form multiplicities",
                v.degree(),
                CLOSED_FORM_BOUND,
            )?;
            let how = if !v.is_split() {
                "V is the restriction of a non-self-conjugate symmetric-group irrep: \
                 multiplicities are those of V_λ"
                    .to_string()
            } else if is_biased_pair(&v, &c)? {
                format!(
                    "split irrep at a split class with λ = φ(μ): (a ± d)/2 with the bias d \
                     in closed form; {PAIRING}"
                )
            } else {
                "split irrep away from its biased class: half of the symmetric-group \
                 multiplicity"
                    .to_string()
            };
            (v.to_string(), c.to_string(), cycle_order(c.mu()), how)
        }
    };
    let inputs =
        json!({"group": group_name(group), "irrep": irrep_label, "class": class_label, "i": i});
    let results = match (group, i) {
        (Group::Sn, Some(i)) => {
            let a = sn_multiplicity(&partition(irrep)?, &partition(class)?, i)?;
            json!({"irrep": irrep_label, "class": class_label, "order": order, "i": i, "multiplicity": a})
        }
        (Group::An, Some(i)) => {
            let a = an_multiplicity(&irrep.parse()?, &class.parse()?, i)?;
            json!({"irrep": irrep_label, "class": class_label, "order": order, "i": i, "multiplicity": a})
        }
        (Group::Sn, None) => serde_json::to_value(sn_multiplicity_vector(
            &partition(irrep)?,
            &partition(class)?,
        )?)
        .expect("serializable"),
        (Group::An, None) => {
            serde_json::to_value(an_multiplicity_vector(&irrep.parse()?, &class.parse()?)?)
                .expect("serializable")
        }
    };
    Ok(record("eigmult", inputs, results, &provenance))
}

fn group_name(g: Group) -> &'static str {
    match g {
        Group::Sn => "sn",
        Group::An => "an",
    }
}

fn bias_row(r: &BiasResult) -> Value {
    json!({
        "i": r.i,
        "d": r.value,
        "abs_d": r.abs_formula,
        "conditions": r.conditions,
    })
}

fn bias_cmd(mu: &str, i: Option<i64>, opts: &Options) -> Result<Outcome> {
    let mu = partition(mu)?;
    guard(opts, "closed-form bias", mu.size(), CLOSED_FORM_BOUND)?;
    let data = CycleTypeData::new(&mu);
    let rows: Vec<Value> = match i {
        Some(i) => vec![bias_row(&bias(&mu, i)?)],
        None => bias_vector(&mu)?.iter().map(bias_row).collect(),
    };
    Ok(record(
        "bias",
        json!({"mu": mu, "i": i, "M": data.product, "m": data.order, "epsilon": data.epsilon}),
        Value::Array(rows),
        &format!(
            "closed form from quadratic Gauss sums and Ramanujan sums, sign fixed by the \
             principal branch of √(εM); |d| recomputed from the magnitude formula; {PAIRING}"
        ),
    ))
}

fn invariant(group: Group, irrep: &str, class: &str, opts: &Options) -> Result<Outcome> {
    let (irrep_label, class_label, obstruction) = match group {
        Group::Sn => {
            let (lam, mu) = (partition(irrep)?, partition(class)?);
            guard(
                opts,
                "invariant-vector predicate",
                lam.size(),
                CLOSED_FORM_BOUND,
            )?;
            (
                lam.to_string(),
                mu.to_string(),
                sn_invariant_obstruction(&lam, &mu)?,
            )
        }
        Group::An => {
            let (v, c): (AnIrrep, AnClass) = (irrep.parse()?, class.parse()?);
            guard(
                opts,
                "invariant-vector predicate",
                v.degree(),
                CLOSED_FORM_BOUND,
            )?;
            (
                v.to_string(),
                c.to_string(),
                an_invariant_obstruction(&v, &c)?,
            )
        }
    };
    Ok(record(
        "invariant",
        json!({"group": group_name(group), "irrep": irrep_label, "class": class_label}),
        json!({"irrep": irrep_label, "class": class_label, "invariant": obstruction.is_none(), "exception": obstruction}),
        match group {
            Group::Sn => "classification of symmetric-group pairs without invariant vectors",
            Group::An => "classification of alternating-group pairs without invariant vectors",
        },
    ))
}

fn unisingular(group: Group, irrep: &str, opts: &Options) -> Result<Outcome> {
    let (label, value, n) = match group {
        Group::Sn => {
            let lam = partition(irrep)?;
            (lam.to_string(), unisingular_sn(&lam), lam.size())
        }
        Group::An => {
            let v: AnIrrep = irrep.parse()?;
            (v.to_string(), unisingular_an(&v), v.degree())
        }
    };
    guard(opts, "unisingularity predicate", n, CLOSED_FORM_BOUND)?;
    Ok(record(
        "unisingular",
        json!({"group": group_name(group), "irrep": label}),
        json!({"irrep": label, "unisingular": value}),
        "every element fixes a non-zero vector unless the irrep is on the list of \
         non-unisingular representations",
    ))
}

fn swanson(n: usize, as_printed: bool, opts: &Options) -> Result<Outcome> {
    if n < 2 {
        return Err(Error::NotApplicable("the n-cycle list needs n >= 2".into()));
    }
    guard(opts, "n-cycle exception list", n, CLOSED_FORM_BOUND)?;
    let rows: Vec<Value> = if as_printed {
        let mut grouped: Vec<(String, Vec<u64>, &str)> = Vec::new();
        for e in swanson_exceptions_as_printed(n).into_iter().rev() {
            let label = e.lambda.to_string();
            match grouped.iter_mut().find(|(l, _, _)| *l == label) {
                Some(g) => g.1.insert(0, e.i),
                None => grouped.push((label, vec![e.i], e.rule)),
            }
        }
        grouped
            .into_iter()
            .map(|(l, is, rule)| json!({"lambda": l, "missing": is, "rule": rule}))
            .collect()
    } else {
        swanson_exception_list(n)
            .entries
            .into_iter()
            .map(|e| json!({"lambda": e.irrep, "missing": e.exponents, "rule": e.rule}))
            .collect()
    };
    Ok(record(
        "swanson",
        json!({"n": n, "as_printed": as_printed}),
        Value::Array(rows),
        if as_printed {
            "literal printed reading of the n-cycle list; disagrees with direct computation"
        } else {
            "exponents i with ζ_n^i not an eigenvalue of an n-cycle; list checked against \
             direct computation"
        },
    ))
}

fn power_conj(mu: &str, i: i64, opts: &Options) -> Result<Outcome> {
    let mu = partition(mu)?;
    guard(opts, "power conjugacy", mu.size(), CLOSED_FORM_BOUND)?;
    let verdict = power_conjugacy(&mu, i)?;
    let data = CycleTypeData::new(&mu);
    let symbol = jacobi(i, data.product as i64)?;
    Ok(record(
        "power-conj",
        json!({"mu": mu, "i": i}),
        json!({"mu": mu, "i": i, "M": data.product, "jacobi": symbol, "verdict": verdict}),
        "w^i is conjugate to w in A_n exactly when the Jacobi symbol (i | M) is 1",
    ))
}

fn verdict_row(method: &str, v: &altchar::global::GlobalVerdict, z: Option<u64>) -> Value {
    json!({
        "method": method,
        "class": v.class,
        "is_global": v.is_global,
        "rule": v.rule,
        "witness_irrep": v.witness.as_ref().map(|w| w.irrep.clone()),
        "witness_multiplicity": v.witness.as_ref().map(|w| w.multiplicity),
        "centralizer_order": z,
    })
}

fn global(mu: &str, verify: bool, opts: &Options) -> Result<Outcome> {
    let mu = partition(mu)?;
    guard(opts, "global-class rule", mu.size(), CLOSED_FORM_BOUND)?;
    let closed = is_global_class(&mu)?;
    let mut rows = vec![verdict_row("closed form", &closed, None)];
    let limits = if opts.unsafe_bounds {
        BruteForceLimits::unbounded()
    } else {
        BruteForceLimits::default()
    };
    let undecided = closed.is_global.is_none();
    if verify || (undecided && mu.size() <= limits.max_degree) {
        let report = global_brute_force_report(&mu, limits)?;
        rows.push(verdict_row(
            "brute force",
            &report.verdict,
            Some(report.centralizer_order),
        ));
    }
    Ok(record(
        "global",
        json!({"mu": mu, "verify": verify}),
        Value::Array(rows),
        "a class is global when Ind_Z^G 1 contains every irrep; brute force computes \
         (1/|Z|) Σ_{x∈Z} χ(x) over the enumerated centralizer Z",
    ))
}

fn chartable(n: usize, opts: &Options) -> Result<Outcome> {
    let bound = if opts.unsafe_bounds {
        usize::MAX
    } else {
        DEFAULT_TABLE_BOUND
    };
    let table = character_table_an_bounded(n, bound)?;
    // Spot check: the table agrees with direct evaluation.
    if let (Some(v), Some(c)) = (table.irreps.last(), table.classes.last()) {
        if an_character(&v.label, &c.label)?
            != *table
                .values
                .last()
                .and_then(|r| r.last())
                .expect("non-empty")
        {
            return Err(Error::Internal("character table assembly".into()));
        }
    }
    Ok(record(
        "chartable",
        json!({"n": n}),
        serde_json::to_value(&table).expect("serializable"),
        &format!(
            "Frobenius splitting of symmetric-group characters; split values (ε ± √(εM))/2; \
             {PAIRING}"
        ),
    ))
}

fn selftest(tier: TierArg, opts: &Options) -> Result<Outcome> {
    let tier = match tier {
        TierArg::Quick => Tier::Quick,
        TierArg::Full => Tier::Full,
    };
    let reports = run_all(tier);
    let failed = reports.iter().any(|r| !r.passed);
    let rows: Vec<Value> = reports
        .iter()
        .map(|r| {
            let mut row =
                json!({"id": r.id, "name": r.name, "passed": r.passed, "detail": r.detail});
            if opts.timing {
                row["elapsed_ms"] = json!(r.elapsed_ms as u64);
            }
            row
        })
        .collect();
    let mut out = record(
        "selftest",
        json!({"tier": tier}),
        Value::Array(rows),
        "closed forms checked against independent oracles",
    );
    out.failed = failed;
    Ok(out)
}
