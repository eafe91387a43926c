use std::path::Path;

use anyhow::{Context, Result};
use promaton::constructions::{
    critical_lengths_capped, evenodd_afa_epsfree, evenodd_afa_rt, evenodd_dfa_capped, evenodd_problem, parity_dfa,
    parity_problem, trios_dfa_capped, trios_lasvegas_pfa, trios_problem, trios_twoway_dfa, up_dfa_capped, up_pfa,
    up_problem,
};
use promaton::conversions::{
    bound_2nfa_to_dfa, bound_afa_to_dfa, bound_svfa_to_dfa, bound_unary_afa_to_dfa, dfa_minimize, nfa_to_dfa_capped,
    remove_epsilon, unary_afa_to_dfa_capped,
};
use promaton::criteria::{evenodd_search_length, run_all, Tier};
use promaton::lab::{
    disjointness_check, expeq_pumping_check, min_size, pumping_check, MachineKind, Pumpable, SearchSpec,
    MAX_DFA_STATES, MAX_UNARY_DFA_STATES, MAX_UNARY_NFA_STATES,
};
use promaton::probabilistic::{
    expeq_compose_capped, expeq_compose_enclosure, expeq_params, expeq_problem, lasvegas_success, monte_carlo,
    outcome_dist, trios_success_bound, RoundModel,
};
use promaton::rational::{format_rational, parse_rational, rat, to_f64};
use promaton::{promise_check, Caps, ExactRational, Machine, Pfa, PromiseProblem, VerificationReport};
use serde::Serialize;
use serde_json::{json, Value};

use crate::args::*;

/// A usage problem detected after parsing (missing or inconsistent flags).
#[derive(Debug)]
pub struct Usage(pub String);

impl std::fmt::Display for Usage {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::error::Error for Usage {}

/// A machine or report file that could not be read or parsed.
#[derive(Debug)]
pub struct Malformed(pub String);

impl std::fmt::Display for Malformed {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::error::Error for Malformed {}

fn usage(msg: impl Into<String>) -> anyhow::Error {
    Usage(msg.into()).into()
}

fn need<T: Clone>(value: &Option<T>, flag: &str, what: &str) -> Result<T> {
    value.clone().ok_or_else(|| usage(format!("{what} needs --{flag}")))
}

/// Report JSON plus whether the command counts as a success.
pub struct Outcome {
    pub json: Value,
    pub success: bool,
}

impl Outcome {
    fn ok(json: Value) -> Self {
        Outcome { json, success: true }
    }

    fn report(report: &VerificationReport) -> Result<Self> {
        Ok(Outcome { json: serde_json::to_value(report)?, success: report.is_solves() })
    }
}

fn to_value(x: &impl Serialize) -> Result<Value> {
    Ok(serde_json::to_value(x)?)
}

pub fn caps(args: &CapArgs) -> Caps {
    let d = Caps::default();
    Caps {
        max_dfa_states: args.max_dfa_states.unwrap_or(d.max_dfa_states),
        max_subset_states: args.max_subset_states.unwrap_or(d.max_subset_states),
        max_critical_length: args.max_critical_length.unwrap_or(d.max_critical_length),
        max_enumeration: args.max_enumeration.unwrap_or(d.max_enumeration),
        max_exact_bits: args.max_exact_bits.unwrap_or(d.max_exact_bits),
    }
}

fn read_machine(path: &Path) -> Result<Machine> {
    let text = std::fs::read_to_string(path).map_err(|e| Malformed(format!("{}: {e}", path.display())))?;
    Machine::from_json(&text).map_err(|e| Malformed(format!("{}: {e}", path.display())).into())
}

fn rational_flag(text: &str) -> Result<ExactRational> {
    parse_rational(text).map_err(|e| usage(format!("{text:?} is not a rational: {e}")))
}

fn build(c: Construction, p: &Params, caps: &Caps) -> Result<Machine> {
    let k = || need(&p.k, "k", "this construction");
    let n = || need(&p.n, "n", "this construction");
    let r = || need(&p.r, "r", "this construction");
    let prob = || rational_flag(&need(&p.p, "p", "this construction")?);
    Ok(match c {
        Construction::EvenoddDfa => evenodd_dfa_capped(k()?, caps)?.into(),
        Construction::EvenoddAfa => evenodd_afa_rt(k()?)?.into(),
        Construction::EvenoddAfaEpsfree => evenodd_afa_epsfree(k()?)?.into(),
        Construction::ParityDfa => parity_dfa().into(),
        Construction::TriosDfa => trios_dfa_capped(n()?, r()?, caps)?.into(),
        Construction::Trios2dfa => trios_twoway_dfa(n()?, r()?)?.into(),
        Construction::TriosPfa => trios_lasvegas_pfa(n()?, r()?)?.into_inner().into(),
        Construction::UpPfa => up_pfa(&prob()?)?.into(),
        Construction::UpDfa => up_dfa_capped(&prob()?, caps)?.into(),
    })
}

/// The problem a construction is meant to solve.
fn native_problem(c: Construction, p: &Params) -> Result<ProblemKind> {
    Ok(match c {
        Construction::EvenoddDfa | Construction::EvenoddAfa | Construction::EvenoddAfaEpsfree => ProblemKind::Evenodd,
        Construction::ParityDfa => ProblemKind::Parity,
        Construction::TriosDfa | Construction::Trios2dfa => ProblemKind::Trios,
        Construction::UpDfa => ProblemKind::Up,
        Construction::TriosPfa | Construction::UpPfa => {
            let _ = p;
            return Err(usage("probabilistic constructions are checked with `verify lv-trios` or `prob lasvegas`"));
        }
    })
}

fn problem(kind: ProblemKind, p: &Params, max_length: Option<usize>, caps: &Caps) -> Result<(PromiseProblem, usize)> {
    Ok(match kind {
        ProblemKind::Evenodd => {
            let k = need(&p.k, "k", "evenodd")?;
            (evenodd_problem(k)?, max_length.unwrap_or_else(|| evenodd_search_length(k)))
        }
        ProblemKind::Trios => {
            let (n, r) = (need(&p.n, "n", "trios")?, need(&p.r, "r", "trios")?);
            (trios_problem(n, r)?, max_length.unwrap_or(r * (3 * n + 1)))
        }
        ProblemKind::Up => {
            let prob = rational_flag(&need(&p.p, "p", "up")?)?;
            let (a, r) = critical_lengths_capped(&prob, caps)?;
            (up_problem(&prob)?, max_length.unwrap_or((a + r + 2) as usize))
        }
        ProblemKind::Parity => {
            let m = p.modulus.unwrap_or(2);
            if m == 0 {
                return Err(usage("--modulus must be positive"));
            }
            (parity_problem(move |len| len % m == 0), max_length.unwrap_or(16))
        }
        ProblemKind::Expeq => {
            let c = need(&p.c, "c", "expeq")?;
            (expeq_problem(c)?, need(&max_length, "max-length", "expeq")?)
        }
    })
}

fn check_machine(machine: &Machine, problem: &PromiseProblem, max_length: usize) -> Result<VerificationReport> {
    let acceptor = machine
        .as_acceptor()
        .ok_or_else(|| usage("probabilistic machines are checked with `prob lasvegas`"))?;
    Ok(promise_check(acceptor, problem, max_length)?)
}

fn as_pfa(machine: Machine) -> Result<Pfa> {
    match machine {
        Machine::Pfa(p) => Ok(p),
        other => Err(usage(format!("expected a pfa machine, got {:?}", other.kind()))),
    }
}

pub fn run(cli: &Cli) -> Result<Outcome> {
    let caps = caps(&cli.caps);
    match &cli.command {
        Command::Build(b) => {
            let machine = build(b.construction, &b.params, &caps)?;
            Ok(Outcome::ok(to_value(&machine.to_file())?))
        }
        Command::Simulate(s) => {
            let machine = read_machine(&s.machine)?;
            match &machine {
                Machine::Pfa(p) => {
                    let d = outcome_dist(p, &s.word)?;
                    Ok(Outcome::ok(json!({ "word": s.word, "distribution": to_value(&d)? })))
                }
                Machine::Dfa(d) => {
                    let outcome = match d.run(&s.word)? {
                        promaton::RunOutcome::Accept => json!("accept"),
                        promaton::RunOutcome::Reject => json!("reject"),
                        promaton::RunOutcome::Stuck(at) => json!({ "stuck_at": at }),
                    };
                    Ok(Outcome::ok(json!({ "word": s.word, "accepted": d.accepts(&s.word)?, "outcome": outcome })))
                }
                other => {
                    let acceptor = other.as_acceptor().expect("non-probabilistic");
                    let word = acceptor.alphabet().encode(&s.word)?;
                    Ok(Outcome::ok(json!({ "word": s.word, "accepted": acceptor.accepts_encoded(&word) })))
                }
            }
        }
        Command::Convert(c) => {
            let machine = read_machine(&c.from)?;
            let out: Machine = match (c.algorithm, machine) {
                (Algorithm::Subset, Machine::Nfa(n)) => nfa_to_dfa_capped(&n, &caps)?.into(),
                (Algorithm::Subset, Machine::Dfa(d)) => d.into(),
                (Algorithm::EpsRemove, Machine::Nfa(n)) => remove_epsilon(&n).into(),
                (Algorithm::UnaryAfaDfa, Machine::Afa(a)) => unary_afa_to_dfa_capped(&a, &caps)?.into(),
                (Algorithm::Minimize, Machine::Dfa(d)) => dfa_minimize(&d).into(),
                (alg, m) => return Err(usage(format!("{alg:?} does not apply to a {:?} machine", m.kind()))),
            };
            Ok(Outcome::ok(to_value(&out.to_file())?))
        }
        Command::Bounds(b) => {
            let v = match b.formula {
                Formula::TwoNfa => bound_2nfa_to_dfa(b.n)?,
                Formula::Afa => bound_afa_to_dfa(b.n)?,
                Formula::UnaryAfa => bound_unary_afa_to_dfa(b.n)?,
                Formula::Svfa => bound_svfa_to_dfa(b.n)?,
            };
            Ok(Outcome::ok(to_value(&v)?))
        }
        Command::Prob(p) => prob(p, cli.seed, &caps),
        Command::Minsize(m) => {
            let (problem, max_length) = problem(m.problem.problem, &m.problem.params, m.problem.max_length, &caps)?;
            let (kind, cap) = match m.kind {
                Kind::UnaryDfa => (MachineKind::UnaryDfa, MAX_UNARY_DFA_STATES),
                Kind::Dfa => (MachineKind::Dfa, MAX_DFA_STATES),
                Kind::UnaryNfa => (MachineKind::UnaryNfa, MAX_UNARY_NFA_STATES),
            };
            let spec = SearchSpec { kind, max_states: m.max_states.unwrap_or(cap), problem, max_length };
            let found = min_size(&spec)?;
            let report = found.to_report();
            let mut json = to_value(&report)?;
            json["witness"] = match &found.witness {
                Some(w) => to_value(&w.to_file())?,
                None => Value::Null,
            };
            // an exhausted search is a result, not a failure
            Ok(Outcome { json, success: report.verdict() != promaton::Verdict::Fails })
        }
        Command::Pumping(p) => {
            let machine = read_machine(&p.machine)?;
            let report = match (p.expeq_t, &machine) {
                (Some(t), Machine::Dfa(d)) => expeq_pumping_check(d, t)?,
                (Some(_), _) => return Err(usage("--expeq-t needs a dfa")),
                (None, m) => {
                    let target = match m {
                        Machine::Dfa(d) => Pumpable::Dfa(d),
                        Machine::Nfa(n) => Pumpable::Nfa(n),
                        other => return Err(usage(format!("pumping needs a dfa or nfa, got {:?}", other.kind()))),
                    };
                    let m_len = p.m.unwrap_or(machine.state_count() as u64);
                    pumping_check(target, m_len, &p.h)?
                }
            };
            Outcome::report(&report)
        }
        Command::Verify(v) => verify(v, &caps),
        Command::ReproduceAll(r) => {
            let tier: Tier = r.tier.parse().map_err(|e: promaton::Error| usage(e.to_string()))?;
            let outcomes = run_all(tier);
            for o in &outcomes {
                eprintln!("{}", o.line());
            }
            let failed: Vec<&str> = outcomes.iter().filter(|o| !o.passed).map(|o| o.id).collect();
            Ok(Outcome {
                json: json!({
                    "tier": tier,
                    "passed": outcomes.len() - failed.len(),
                    "failed": failed,
                    "criteria": to_value(&outcomes)?,
                }),
                success: failed.is_empty(),
            })
        }
    }
}

fn prob(p: &ProbCommand, seed: u64, caps: &Caps) -> Result<Outcome> {
    match p {
        ProbCommand::Exact { machine, word } => {
            let pfa = as_pfa(read_machine(machine)?)?;
            let d = outcome_dist(&pfa, word)?;
            Ok(Outcome::ok(json!({ "word": word, "distribution": to_value(&d)? })))
        }
        ProbCommand::Mc { machine, word, trials } => {
            let pfa = as_pfa(read_machine(machine)?)?;
            let sample = monte_carlo(&pfa, word, *trials, seed)?;
            let mut json = to_value(&sample)?;
            json["word"] = json!(word);
            json["accept_frequency"] = json!(sample.accept_frequency());
            Ok(Outcome::ok(json))
        }
        ProbCommand::Lasvegas(a) => {
            let kind = a.problem.unwrap_or(ProblemKind::Trios);
            let (problem, max_length) = problem(kind, &a.params, a.max_length, caps)?;
            let pfa = match &a.machine {
                Some(path) => as_pfa(read_machine(path)?)?,
                None if kind == ProblemKind::Trios => {
                    trios_lasvegas_pfa(need(&a.params.n, "n", "trios")?, need(&a.params.r, "r", "trios")?)?.into_inner()
                }
                None => return Err(usage("--machine is required unless the problem is trios")),
            };
            let threshold = match (&a.threshold, kind) {
                (Some(t), _) => rational_flag(t)?,
                (None, ProblemKind::Trios) => {
                    trios_success_bound(need(&a.params.n, "n", "trios")? as u64, need(&a.params.r, "r", "trios")? as u64)?
                }
                (None, _) => return Err(usage("--threshold is required unless the problem is trios")),
            };
            Outcome::report(&lasvegas_success(&pfa, &problem, max_length, &threshold)?)
        }
        ProbCommand::ExpeqCompose(a) => {
            let model = match (a.c, &a.a) {
                (Some(c), None) => {
                    let base = expeq_params(c, need(&a.m, "m", "expeq-compose")?, need(&a.n, "n", "expeq-compose")?)?;
                    let base = match &a.r {
                        Some(r) => base.with_reject(rational_flag(r)?)?,
                        None => base,
                    };
                    match a.side {
                        Some(Side::Yes) => base.extremal_yes()?,
                        Some(Side::No) => base.extremal_no()?,
                        None => base,
                    }
                }
                (None, Some(acc)) => RoundModel::new(
                    rational_flag(acc)?,
                    rational_flag(&need(&a.r, "r", "expeq-compose")?)?,
                    need(&a.t, "t", "expeq-compose")?,
                )?,
                _ => return Err(usage("expeq-compose needs either --c/--m/--n or --a/--r/--t")),
            };
            let mut json = json!({ "model": to_value(&model)? });
            match expeq_compose_capped(&model, caps) {
                Ok(d) => {
                    json["mode"] = json!("exact");
                    json["distribution"] = to_value(&d)?;
                }
                Err(e) if e.is_resource_cap() => {
                    let e = expeq_compose_enclosure(&model, a.bits)?;
                    let pair = |x: &promaton::rational::Enclosure| json!([format_rational(&x.lo), format_rational(&x.hi)]);
                    json["mode"] = json!("enclosure");
                    json["bits"] = json!(a.bits);
                    json["distribution"] =
                        json!({ "accept": pair(&e.accept), "reject": pair(&e.reject), "neutral": pair(&e.neutral) });
                    let mid = |x: &promaton::rational::Enclosure| to_f64(&((&x.lo + &x.hi) / rat(2, 1)));
                    json["approx"] = json!({ "accept": mid(&e.accept), "reject": mid(&e.reject), "neutral": mid(&e.neutral) });
                }
                Err(e) => return Err(e.into()),
            }
            Ok(Outcome::ok(json))
        }
        ProbCommand::ExpeqParams { c, m, n } => Ok(Outcome::ok(to_value(&expeq_params(*c, *m, *n)?)?)),
    }
}

fn verify(v: &VerifyCommand, caps: &Caps) -> Result<Outcome> {
    match v {
        VerifyCommand::LvTrios { n, r } => {
            let pfa = trios_lasvegas_pfa(*n, *r)?;
            let bound = trios_success_bound(*n as u64, *r as u64)?;
            Outcome::report(&lasvegas_success(&pfa, &trios_problem(*n, *r)?, r * (3 * n + 1), &bound)?)
        }
        VerifyCommand::Promise { machine, problem: p } => {
            let machine = read_machine(machine)?;
            let (problem, max_length) = problem(p.problem, &p.params, p.max_length, caps)?;
            Outcome::report(&check_machine(&machine, &problem, max_length)?)
        }
        VerifyCommand::Construction { construction, params, max_length } => {
            let kind = native_problem(*construction, params)?;
            let machine = build(*construction, params, caps)?;
            let (problem, max_length) = problem(kind, params, *max_length, caps)?;
            Outcome::report(&check_machine(&machine, &problem, max_length)?)
        }
        VerifyCommand::Disjoint { problem: p } => {
            let (problem, max_length) = problem(p.problem, &p.params, p.max_length, caps)?;
            Outcome::report(&disjointness_check(&problem, max_length))
        }
    }
}

pub fn render(json: &Value) -> Result<String> {
    let mut text = serde_json::to_string_pretty(json).context("serializing report")?;
    text.push('\n');
    Ok(text)
}

pub fn exit_code(err: &anyhow::Error) -> i32 {
    if err.downcast_ref::<Usage>().is_some() {
        return 2;
    }
    if err.downcast_ref::<Malformed>().is_some() {
        return 4;
    }
    match err.downcast_ref::<promaton::Error>() {
        Some(e) if e.is_resource_cap() => 3,
        Some(
            promaton::Error::InvalidParameter(_)
            | promaton::Error::AlphabetMismatch { .. }
            | promaton::Error::SymbolNotInAlphabet(_),
        ) => 2,
        Some(
            promaton::Error::Parse(_)
            | promaton::Error::Json(_)
            | promaton::Error::InvalidMachine(_)
            | promaton::Error::InvalidAlphabet(_),
        ) => 4,
        _ => 5,
    }
}

