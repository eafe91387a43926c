use rayon::prelude::*;
use serde::Serialize;

use crate::alphabet::Alphabet;
use crate::automata::{promise_check, Class, Dfa, Machine, Nfa, PromiseProblem, VerificationReport};
use crate::caps::Caps;
use crate::error::{Error, Result};

pub const MAX_UNARY_DFA_STATES: usize = 18;
pub const MAX_DFA_STATES: usize = 4;
pub const MAX_DFA_ALPHABET: usize = 3;
pub const MAX_UNARY_NFA_STATES: usize = 4;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum MachineKind {
    UnaryDfa,
    Dfa,
    UnaryNfa,
}

impl MachineKind {
    pub fn name(self) -> &'static str {
        match self {
            MachineKind::UnaryDfa => "unary-dfa",
            MachineKind::Dfa => "dfa",
            MachineKind::UnaryNfa => "unary-nfa",
        }
    }
}

impl std::str::FromStr for MachineKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "unary-dfa" => Ok(MachineKind::UnaryDfa),
            "dfa" => Ok(MachineKind::Dfa),
            "unary-nfa" => Ok(MachineKind::UnaryNfa),
            other => Err(Error::InvalidParameter(format!("unknown machine kind {other:?}"))),
        }
    }
}

/// What to search: machines of `kind` with at most `max_states` states
/// solving `problem` on every instance of length ≤ `max_length`.
#[derive(Clone)]
pub struct SearchSpec {
    pub kind: MachineKind,
    pub max_states: usize,
    pub problem: PromiseProblem,
    pub max_length: usize,
}

/// Result of a minimum-size search.
#[derive(Clone, Debug)]
pub struct MinSize {
    pub kind: MachineKind,
    /// Smallest solving size, or `None` if nothing up to `max_states` solves.
    pub size: Option<usize>,
    pub max_states: usize,
    pub max_length: usize,
    pub instances: usize,
    pub witness: Option<Machine>,
    /// `promise_check` of the witness (present iff a witness was found).
    pub witness_check: Option<VerificationReport>,
}

impl MinSize {
    pub fn to_report(&self) -> VerificationReport {
        let mut report = match &self.witness_check {
            Some(r) if r.is_solves() => VerificationReport::solves(),
            Some(r) => r.clone(),
            None => VerificationReport::inconclusive(),
        };
        report.record("kind", self.kind.name());
        report.record("max_states", self.max_states);
        report.record("max_length", self.max_length);
        report.record("instances", self.instances);
        match self.size {
            Some(s) => report.record("value", s),
            None => report.record("value", format!("no solver with ≤ {} states", self.max_states)),
        }
        report
    }
}

struct Encoded {
    word: Vec<usize>,
    yes: bool,
}

fn encoded_instances(problem: &PromiseProblem, max_length: usize, caps: &Caps) -> Result<Vec<Encoded>> {
    let list = problem.instances(max_length);
    if list.len() > caps.max_enumeration {
        return Err(Error::cap("instances", list.len(), caps.max_enumeration));
    }
    list.into_iter()
        .map(|i| {
            Ok(Encoded {
                word: problem.alphabet().encode(&i.word)?,
                yes: i.class == Class::Yes,
            })
        })
        .collect()
}

fn check_cap(spec: &SearchSpec, limit: usize) -> Result<()> {
    if spec.max_states > limit {
        return Err(Error::cap("search states", spec.max_states, limit));
    }
    if spec.max_states == 0 {
        return Err(Error::InvalidParameter("max_states must be at least 1".into()));
    }
    Ok(())
}

fn finish(spec: &SearchSpec, instances: usize, found: Option<(usize, Machine)>) -> Result<MinSize> {
    let (size, witness, witness_check) = match found {
        Some((size, machine)) => {
            let check = match &machine {
                Machine::Dfa(d) => promise_check(d, &spec.problem, spec.max_length)?,
                Machine::Nfa(n) => promise_check(n, &spec.problem, spec.max_length)?,
                _ => unreachable!("searches only produce DFAs and NFAs"),
            };
            (Some(size), Some(machine), Some(check))
        }
        None => (None, None, None),
    };
    Ok(MinSize {
        kind: spec.kind,
        size,
        max_states: spec.max_states,
        max_length: spec.max_length,
        instances,
        witness,
        witness_check,
    })
}

pub fn min_size(spec: &SearchSpec) -> Result<MinSize> {
    match spec.kind {
        MachineKind::UnaryDfa => min_unary_dfa_size(spec),
        MachineKind::Dfa => min_dfa_size(spec),
        MachineKind::UnaryNfa => min_unary_nfa_size(spec),
    }
}

fn require_unary(problem: &PromiseProblem) -> Result<()> {
    if !problem.alphabet().is_unary() {
        return Err(Error::InvalidParameter(format!("{} is not unary", problem.name())));
    }
    Ok(())
}

/// Smallest unary DFA, searched in lasso normal form.
///
/// A reachable unary DFA with `s` states is a path `0 → … → s−1` whose last
/// transition is undefined or returns to some `ℓ < s`. For a fixed shape,
/// some accepting set works iff no yes-instance runs off the path and no
/// state is hit by both a yes- and a no-instance; the yes-states then form
/// the canonical accepting set.
pub fn min_unary_dfa_size(spec: &SearchSpec) -> Result<MinSize> {
    require_unary(&spec.problem)?;
    check_cap(spec, MAX_UNARY_DFA_STATES)?;
    let instances = encoded_instances(&spec.problem, spec.max_length, &Caps::default())?;
    let lengths: Vec<(usize, bool)> = instances.iter().map(|i| (i.word.len(), i.yes)).collect();
    for s in 1..=spec.max_states {
        // loop targets in canonical order: undefined first, then ℓ = 0..s−1
        let shapes: Vec<Option<usize>> = std::iter::once(None).chain((0..s).map(Some)).collect();
        let found = shapes.par_iter().find_map_first(|&back| lasso_solver(s, back, &lengths));
        if let Some(dfa) = found {
            return finish(spec, instances.len(), Some((s, Machine::Dfa(dfa))));
        }
    }
    finish(spec, instances.len(), None)
}

fn lasso_solver(s: usize, back: Option<usize>, lengths: &[(usize, bool)]) -> Option<Dfa> {
    let state_after = |len: usize| -> Option<usize> {
        if len < s {
            return Some(len);
        }
        let l = back?;
        let period = s - l;
        Some(l + (len - l) % period)
    };
    let mut mark: Vec<Option<bool>> = vec![None; s];
    for &(len, yes) in lengths {
        match (state_after(len), yes) {
            (None, true) => return None,
            (None, false) => {}
            (Some(q), want) => match mark[q] {
                Some(m) if m != want => return None,
                _ => mark[q] = Some(want),
            },
        }
    }
    let delta = (0..s).map(|q| if q + 1 < s { Some(q + 1) } else { back }).collect();
    let accepting = mark.iter().map(|m| *m == Some(true)).collect();
    Dfa::from_table(Alphabet::unary(), 0, accepting, delta).ok()
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Entry {
    Open,
    Undefined,
    To(usize),
}

/// Backtracking over partial transition tables, assigning entries only
/// when an instance first needs them. States are numbered in order of
/// first use, which removes relabelled duplicates.
#[derive(Clone)]
struct TableSearch<'a> {
    sigma: usize,
    limit: usize,
    used: usize,
    table: Vec<Entry>,
    mark: Vec<Option<bool>>,
    instances: &'a [Encoded],
}

impl TableSearch<'_> {
    fn options(&self) -> Vec<Entry> {
        let mut out: Vec<Entry> = (0..self.used).map(Entry::To).collect();
        if self.used < self.limit {
            out.push(Entry::To(self.used));
        }
        out.push(Entry::Undefined);
        out
    }

    /// Runs instance `i` until it finishes or meets an open entry.
    fn advance(&self, i: usize) -> std::result::Result<Option<usize>, usize> {
        let mut q = 0;
        for &a in &self.instances[i].word {
            match self.table[q * self.sigma + a] {
                Entry::Open => return Err(q * self.sigma + a),
                Entry::Undefined => return Ok(None),
                Entry::To(t) => q = t,
            }
        }
        Ok(Some(q))
    }

    fn assign(&mut self, slot: usize, entry: Entry) {
        self.table[slot] = entry;
        if entry == Entry::To(self.used) {
            self.used += 1;
        }
    }

    fn unassign(&mut self, slot: usize, entry: Entry) {
        if self.used > 0 && entry == Entry::To(self.used - 1) && !self.is_used_elsewhere(slot, self.used - 1) {
            self.used -= 1;
        }
        self.table[slot] = Entry::Open;
    }

    fn is_used_elsewhere(&self, slot: usize, q: usize) -> bool {
        q == 0 || self.table.iter().enumerate().any(|(i, &e)| i != slot && e == Entry::To(q))
    }

    fn solve(&mut self, i: usize) -> bool {
        if i == self.instances.len() {
            return true;
        }
        match self.advance(i) {
            Err(slot) => {
                for entry in self.options() {
                    self.assign(slot, entry);
                    if self.solve(i) {
                        return true;
                    }
                    self.unassign(slot, entry);
                }
                false
            }
            Ok(None) => !self.instances[i].yes && self.solve(i + 1),
            Ok(Some(q)) => {
                let want = self.instances[i].yes;
                match self.mark[q] {
                    Some(m) if m != want => false,
                    Some(_) => self.solve(i + 1),
                    None => {
                        self.mark[q] = Some(want);
                        if self.solve(i + 1) {
                            return true;
                        }
                        self.mark[q] = None;
                        false
                    }
                }
            }
        }
    }

    fn into_dfa(self, alphabet: &Alphabet) -> Result<Dfa> {
        let n = self.used.max(1);
        let delta = self.table[..n * self.sigma]
            .iter()
            .map(|e| match e {
                Entry::To(t) => Some(*t),
                _ => None,
            })
            .collect();
        let accepting = self.mark[..n].iter().map(|m| *m == Some(true)).collect();
        Dfa::from_table(alphabet.clone(), 0, accepting, delta)
    }
}

/// Smallest DFA over a general (≤ 3 symbol) alphabet, by exhaustive
/// backtracking over partial transition tables.
pub fn min_dfa_size(spec: &SearchSpec) -> Result<MinSize> {
    let alphabet = spec.problem.alphabet().clone();
    if alphabet.len() > MAX_DFA_ALPHABET {
        return Err(Error::cap("search alphabet", alphabet.len(), MAX_DFA_ALPHABET));
    }
    check_cap(spec, MAX_DFA_STATES)?;
    let instances = encoded_instances(&spec.problem, spec.max_length, &Caps::default())?;
    for s in 1..=spec.max_states {
        let root = TableSearch {
            sigma: alphabet.len(),
            limit: s,
            used: 1,
            table: vec![Entry::Open; s * alphabet.len()],
            mark: vec![None; s],
            instances: &instances,
        };
        // split on the first open entry so branches can run in parallel
        let first = if instances.is_empty() { Ok(None) } else { root.advance(0) };
        let branches: Vec<TableSearch> = match first {
            Err(slot) => root
                .options()
                .into_iter()
                .map(|entry| {
                    let mut b = root.clone();
                    b.assign(slot, entry);
                    b
                })
                .collect(),
            _ => vec![root],
        };
        let found = branches.into_par_iter().find_map_first(|mut b| b.solve(0).then_some(b));
        if let Some(solution) = found {
            let dfa = solution.into_dfa(&alphabet)?;
            return finish(spec, instances.len(), Some((s, Machine::Dfa(dfa))));
        }
    }
    finish(spec, instances.len(), None)
}

/// Smallest unary NFA, over every transition relation with initial state 0.
///
/// For a fixed relation the best accepting set is everything not reached
/// by a no-instance; the relation works iff each yes-instance reaches it.
pub fn min_unary_nfa_size(spec: &SearchSpec) -> Result<MinSize> {
    require_unary(&spec.problem)?;
    check_cap(spec, MAX_UNARY_NFA_STATES)?;
    let instances = encoded_instances(&spec.problem, spec.max_length, &Caps::default())?;
    let max_len = instances.iter().map(|i| i.word.len()).max().unwrap_or(0);
    for s in 1..=spec.max_states {
        let relations: u64 = 1 << (s * s);
        let found = (0..relations).into_par_iter().find_map_first(|rel| {
            // successor mask of each state
            let succ: Vec<u32> = (0..s).map(|p| ((rel >> (p * s)) & ((1 << s) - 1)) as u32).collect();
            let mut reach = Vec::with_capacity(max_len + 1);
            let mut set: u32 = 1;
            for _ in 0..=max_len {
                reach.push(set);
                let mut next = 0;
                for (p, &m) in succ.iter().enumerate() {
                    if set >> p & 1 == 1 {
                        next |= m;
                    }
                }
                set = next;
            }
            let no_union = instances.iter().filter(|i| !i.yes).fold(0u32, |acc, i| acc | reach[i.word.len()]);
            let accepting = !no_union & ((1u32 << s) - 1);
            instances
                .iter()
                .filter(|i| i.yes)
                .all(|i| reach[i.word.len()] & accepting != 0)
                .then_some((succ, accepting))
        });
        if let Some((succ, accepting)) = found {
            let succ = &succ;
            let transitions: Vec<(usize, Option<char>, usize)> = (0..s)
                .flat_map(|p| (0..s).filter(move |q| succ[p] >> q & 1 == 1).map(move |q| (p, Some('a'), q)))
                .collect();
            let acc = (0..s).filter(|q| accepting >> q & 1 == 1);
            let nfa = Nfa::new(Alphabet::unary(), s, 0, transitions, acc)?;
            return finish(spec, instances.len(), Some((s, Machine::Nfa(nfa))));
        }
    }
    finish(spec, instances.len(), None)
}
