use num_traits::{One, Zero};

use crate::alphabet::Alphabet;
use crate::automata::{
    Dfa, Instance, LasVegasPfa, Move, Pfa, PromiseProblem, Role, TapeSymbol, TwoWayMachine,
    TwoWayTransition,
};
use crate::caps::Caps;
use crate::error::{Error, Result};
use crate::rational::{rat, ExactRational};

use super::States;

/// `trios_dfa(n, r)` has at most `TRIOS_DFA_CONSTANT · 2^n` states.
pub const TRIOS_DFA_CONSTANT: usize = 4;

/// `trios_twoway_dfa(n, r)` has at most `TRIOS_TWOWAY_CONSTANT · n + 8` states.
pub const TRIOS_TWOWAY_CONSTANT: usize = 12;

fn trios_alphabet() -> Alphabet {
    Alphabet::new(['0', '1', '#']).expect("fixed alphabet")
}

fn check_params(n: usize, r: usize) -> Result<()> {
    if n == 0 || r == 0 {
        return Err(Error::InvalidParameter(format!("n and r must be positive, got n={n}, r={r}")));
    }
    Ok(())
}

/// Splits `#a_1b_1c_1 … #a_rb_rc_r` into its `(a_i, b_i, c_i)` blocks.
pub fn parse_trios(word: &str, n: usize, r: usize) -> Option<Vec<(&str, &str, &str)>> {
    let seg = 3 * n + 1;
    if word.len() != seg * r || !word.is_ascii() {
        return None;
    }
    word.as_bytes()
        .chunks(seg)
        .map(|s| {
            let s = std::str::from_utf8(s).ok()?;
            let body = s.strip_prefix('#')?;
            body.bytes().all(|b| b == b'0' || b == b'1').then(|| (&body[..n], &body[n..2 * n], &body[2 * n..]))
        })
        .collect()
}

fn some_bit_below(x: &str, y: &str) -> bool {
    x.bytes().zip(y.bytes()).any(|(a, b)| a < b)
}

/// Segments `#x x y` (yes, some `x_j < y_j`) against `#x y x` (no, some `x_j > y_j`).
pub fn trios_problem(n: usize, r: usize) -> Result<PromiseProblem> {
    check_params(n, r)?;
    let yes = move |w: &str| {
        parse_trios(w, n, r).is_some_and(|segs| segs.iter().all(|(x, u, v)| x == u && some_bit_below(x, v)))
    };
    let no = move |w: &str| {
        parse_trios(w, n, r).is_some_and(|segs| segs.iter().all(|(x, u, v)| x == v && some_bit_below(u, x)))
    };
    let enumerate = move |max_length: usize| {
        if r * (3 * n + 1) > max_length || n >= 32 {
            return Vec::new();
        }
        let blocks: Vec<String> = (0..1u64 << n).map(|v| format!("{v:0n$b}")).collect();
        let mut pairs = Vec::new();
        for x in &blocks {
            for y in &blocks {
                if some_bit_below(x, y) {
                    pairs.push((x.as_str(), y.as_str()));
                }
            }
        }
        let mut out = Vec::new();
        let mut choice = vec![0usize; r];
        loop {
            let mut yes_word = String::with_capacity(r * (3 * n + 1));
            let mut no_word = String::with_capacity(r * (3 * n + 1));
            for &c in &choice {
                let (x, y) = pairs[c];
                yes_word.extend(["#", x, x, y]);
                // the no-side bit relation is x' > y' with x' = y, y' = x
                no_word.extend(["#", y, x, y]);
            }
            out.push(Instance::yes(yes_word));
            out.push(Instance::no(no_word));
            let mut i = r;
            loop {
                if i == 0 {
                    return out;
                }
                i -= 1;
                choice[i] += 1;
                if choice[i] < pairs.len() {
                    break;
                }
                choice[i] = 0;
            }
        }
    };
    Ok(PromiseProblem::new(format!("trios(n={n},r={r})"), trios_alphabet(), yes, no, enumerate))
}

/// Selection probabilities `p_1, …, p_n` of the Las Vegas machine.
pub fn trios_ladder(n: usize) -> Vec<ExactRational> {
    let one_over_n = rat(1, n as i64);
    let mut prefix = ExactRational::one();
    let mut ladder = Vec::with_capacity(n);
    for _ in 0..n {
        let p = &one_over_n / &prefix;
        prefix *= ExactRational::one() - &p;
        ladder.push(p);
    }
    ladder
}

/// Las Vegas automaton with `4n+3` states.
///
/// Picks a bit `x_j` uniformly, then checks `v_j = 1` (accept) when
/// `x_j = 0`, or `u_j = 0` (reject) when `x_j = 1`; otherwise it waits for
/// the next segment.
pub fn trios_lasvegas_pfa(n: usize, r: usize) -> Result<LasVegasPfa> {
    check_params(n, r)?;
    let mut st = States::default();
    let q_ini = st.add("q_ini");
    let q_acc = st.add("q_acc");
    let q_rej = st.add("q_rej");
    let s: Vec<usize> = (1..=n).map(|j| st.add(format!("s_{j}"))).collect();
    let t0: Vec<usize> = (1..=2 * n).map(|j| st.add(format!("t_{j},0"))).collect();
    let t1: Vec<usize> = (1..=n).map(|j| st.add(format!("t_{j},1"))).collect();
    let mut roles = vec![Role::Neutral; st.len()];
    roles[q_acc] = Role::Accepting;
    roles[q_rej] = Role::Rejecting;

    let one = ExactRational::one;
    let mut t = Vec::new();
    for b in ['0', '1'] {
        t.push((q_ini, b, q_ini, one()));
    }
    t.push((q_ini, '#', s[0], one()));
    for (j, p) in trios_ladder(n).into_iter().enumerate() {
        let rest = one() - &p;
        for (b, first) in [('0', t0[0]), ('1', t1[0])] {
            t.push((s[j], b, first, p.clone()));
            if !rest.is_zero() {
                t.push((s[j], b, s[j + 1], rest.clone()));
            }
        }
    }
    for b in ['0', '1'] {
        for w in t0.windows(2) {
            t.push((w[0], b, w[1], one()));
        }
        for w in t1.windows(2) {
            t.push((w[0], b, w[1], one()));
        }
    }
    t.push((t0[2 * n - 1], '1', q_acc, one()));
    t.push((t0[2 * n - 1], '0', q_ini, one()));
    t.push((t1[n - 1], '0', q_rej, one()));
    t.push((t1[n - 1], '1', q_ini, one()));
    for c in ['0', '1', '#'] {
        t.push((q_acc, c, q_acc, one()));
        t.push((q_rej, c, q_rej, one()));
    }
    let pfa = Pfa::new(trios_alphabet(), q_ini, roles, t)?.with_labels(st.labels())?;
    Ok(LasVegasPfa::new(pfa))
}

/// One-way deterministic solver with `3·2^n + n − 1` states.
///
/// Reads `x` into a prefix tree, then checks `u = x` by consuming the
/// remembered suffix one bit at a time, then skips `v`. Under the promise a
/// segment with `u = x` is a yes-segment, so `v` is never inspected.
pub fn trios_dfa(n: usize, r: usize) -> Result<Dfa> {
    trios_dfa_capped(n, r, &Caps::default())
}

pub fn trios_dfa_capped(n: usize, r: usize, caps: &Caps) -> Result<Dfa> {
    check_params(n, r)?;
    let needed = if n >= 40 { u128::MAX } else { 3u128 * (1u128 << n) + n as u128 };
    if needed > caps.max_dfa_states as u128 {
        return Err(Error::cap("DFA states", needed, caps.max_dfa_states));
    }
    let mut st = States::default();
    let init = st.add("init");
    // prefix states "x:<bits>" for |bits| < n, suffix states "u:<bits>" for 1 ≤ |bits| ≤ n
    for len in 0..n {
        for v in 0..1usize << len {
            st.add(format!("x:{}", bits(v, len)));
        }
    }
    for len in (1..=n).rev() {
        for v in 0..1usize << len {
            st.add(format!("u:{}", bits(v, len)));
        }
    }
    let skip: Vec<usize> = (0..=n).map(|i| st.add(format!("v{i}"))).collect();
    let end = skip[n];
    let root = st.get("x:");

    let mut t = vec![(init, '#', root), (end, '#', root)];
    for len in 0..n {
        for v in 0..1usize << len {
            let from = st.get(&format!("x:{}", bits(v, len)));
            for b in 0..2 {
                let next = bits(v << 1 | b, len + 1);
                let to = if len + 1 == n { format!("u:{next}") } else { format!("x:{next}") };
                t.push((from, digit(b), st.get(&to)));
            }
        }
    }
    for len in 1..=n {
        for v in 0..1usize << len {
            let word = bits(v, len);
            let from = st.get(&format!("u:{word}"));
            let to = if len == 1 { skip[0] } else { st.get(&format!("u:{}", &word[1..])) };
            t.push((from, word.chars().next().expect("nonempty"), to));
        }
    }
    for i in 0..n {
        for b in ['0', '1'] {
            t.push((skip[i], b, skip[i + 1]));
        }
    }
    Dfa::new(trios_alphabet(), st.len(), init, t, [end])?.with_labels(st.labels())
}

fn bits(v: usize, len: usize) -> String {
    if len == 0 {
        String::new()
    } else {
        format!("{v:0len$b}")
    }
}

fn digit(b: usize) -> char {
    if b == 0 {
        '0'
    } else {
        '1'
    }
}

struct TwoWayBuilder {
    st: States,
    t: Vec<TwoWayTransition>,
}

impl TwoWayBuilder {
    fn edge(&mut self, from: usize, read: TapeSymbol, to: usize, movement: Move) {
        self.t.push(TwoWayTransition { from, read, to, movement });
    }

    /// Moves `steps ≥ 1` cells from `from` (reading one of `reads`), crossing
    /// bits only, and arrives in `to`. Intermediate states are `name.1`, `name.2`, ….
    fn walk(&mut self, name: &str, from: usize, reads: &[TapeSymbol], movement: Move, steps: usize, to: usize) {
        let mut current = from;
        let mut current_reads = reads.to_vec();
        for i in 1..steps {
            let next = self.st.add(format!("{name}.{i}"));
            for &read in &current_reads {
                self.edge(current, read, next, movement);
            }
            current = next;
            current_reads = vec![TapeSymbol::Symbol(0), TapeSymbol::Symbol(1)];
        }
        for &read in &current_reads {
            self.edge(current, read, to, movement);
        }
    }
}

/// Two-way deterministic solver with `9n − 1` states for `n ≥ 2` (11 for `n = 1`).
///
/// For each segment: go to `u_n`, compare `u_j` with `x_j` for
/// `j = n, …, 1` by shuttling `n` left and `n−1` right until the left trip
/// lands on `#`, then search upward for `u_j < v_j` and skip to the next
/// segment. Only promise instances are specified.
pub fn trios_twoway_dfa(n: usize, r: usize) -> Result<TwoWayMachine> {
    check_params(n, r)?;
    let alphabet = trios_alphabet();
    let zero = TapeSymbol::Symbol(0);
    let one = TapeSymbol::Symbol(1);
    let hash = TapeSymbol::Symbol(2);
    let bits = [zero, one];
    let mut b = TwoWayBuilder { st: States::default(), t: Vec::new() };
    let init = b.st.add("init");
    let seg = b.st.add("seg");
    let check = b.st.add("check");
    let cmp = [b.st.add("cmp0"), b.st.add("cmp1")];
    let search = b.st.add("search");
    let probe = b.st.add("probe");
    let skip = b.st.add("skip");
    let accept = b.st.add("accept");

    b.edge(init, TapeSymbol::LeftEnd, seg, Move::Right);
    // '#' to u_n: 2n cells right
    b.walk("to_u", seg, &[hash], Move::Right, 2 * n, check);
    // u_j to x_j: n cells left, remembering the bit
    for (i, (bit, &target)) in bits.iter().zip(&cmp).enumerate() {
        b.walk(&format!("left{i}"), check, &[*bit], Move::Left, n, target);
    }
    // x_j back to u_{j-1}: n-1 cells right
    for (i, (bit, &state)) in bits.iter().zip(&cmp).enumerate() {
        if n == 1 {
            b.edge(state, *bit, check, Move::Stay);
        } else {
            b.walk(&format!("back{i}"), state, &[*bit], Move::Right, n - 1, check);
        }
    }
    // both compare states land on '#' once every bit matched: go to u_1
    let to_u1 = b.st.add("to_u1");
    for &state in &cmp {
        b.edge(state, hash, to_u1, Move::Right);
    }
    b.walk("to_u1", to_u1, &bits, Move::Right, n, search);
    b.edge(search, one, search, Move::Right);
    b.walk("to_v", search, &[zero], Move::Right, n, probe);
    b.edge(probe, one, skip, Move::Right);
    if n > 1 {
        b.walk("to_next_u", probe, &[zero], Move::Left, n - 1, search);
    }
    for bit in bits {
        b.edge(skip, bit, skip, Move::Right);
    }
    b.edge(skip, hash, seg, Move::Stay);
    b.edge(skip, TapeSymbol::RightEnd, accept, Move::Stay);

    let count = b.st.len();
    TwoWayMachine::new(alphabet, count, init, b.t, [accept], true)?.with_labels(b.st.labels())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::automata::promise_check;

    #[test]
    fn problem_examples() {
        let p = trios_problem(1, 1).unwrap();
        assert!(p.is_yes("#001"));
        assert!(p.is_no("#101"));
        assert!(!p.is_yes("#000") && !p.is_no("#000"));
        let inst = p.instances(4);
        assert_eq!(inst.len(), 2);
        assert!(inst.iter().all(|i| !i.word.starts_with("#00") || i.word == "#001"));
    }

    #[test]
    fn enumerator_matches_predicates() {
        let p = trios_problem(2, 2).unwrap();
        let inst = p.instances(14);
        // 4^2 − 3^2 = 7 valid pairs per segment
        assert_eq!(inst.len(), 2 * 49);
        for i in &inst {
            match i.class {
                crate::automata::Class::Yes => assert!(p.is_yes(&i.word) && !p.is_no(&i.word)),
                crate::automata::Class::No => assert!(p.is_no(&i.word) && !p.is_yes(&i.word)),
            }
        }
        assert!(p.instances(13).is_empty());
    }

    #[test]
    fn ladder_examples() {
        assert_eq!(trios_ladder(2), vec![rat(1, 2), rat(1, 1)]);
        assert_eq!(trios_ladder(3), vec![rat(1, 3), rat(1, 2), rat(1, 1)]);
    }

    #[test]
    fn pfa_shape() {
        let p = trios_lasvegas_pfa(2, 1).unwrap();
        assert_eq!(p.state_count(), 11);
        assert_eq!(p.role(p.initial()), Role::Neutral);
        let s1 = p.state_by_label("s_1").unwrap();
        let t10 = p.state_by_label("t_1,0").unwrap();
        assert_eq!(p.probability(s1, 0, t10), rat(1, 2));
    }

    #[test]
    fn dfa_solves_small() {
        let d = trios_dfa(1, 1).unwrap();
        assert!(promise_check(&d, &trios_problem(1, 1).unwrap(), 4).unwrap().is_solves());
        let d = trios_dfa(2, 2).unwrap();
        assert!(promise_check(&d, &trios_problem(2, 2).unwrap(), 14).unwrap().is_solves());
        for n in 1..=6 {
            let size = trios_dfa(n, 1).unwrap().state_count();
            assert_eq!(size, 3 * (1 << n) + n - 1);
            assert!(size >= 1 << n && size <= TRIOS_DFA_CONSTANT << n);
        }
    }

    #[test]
    fn twoway_solves_small() {
        let m = trios_twoway_dfa(1, 1).unwrap();
        assert!(m.accepts("#001").unwrap());
        assert!(!m.accepts("#101").unwrap());
        for (n, r) in [(1, 1), (1, 3), (2, 1), (2, 3), (3, 2)] {
            let m = trios_twoway_dfa(n, r).unwrap();
            let p = trios_problem(n, r).unwrap();
            let report = promise_check(&m, &p, r * (3 * n + 1)).unwrap();
            assert!(report.is_solves(), "n={n} r={r}: {:?}", report.counterexample());
        }
    }

    #[test]
    fn twoway_is_linear() {
        for n in 1..=6 {
            let size = trios_twoway_dfa(n, 1).unwrap().state_count();
            assert!(size <= TRIOS_TWOWAY_CONSTANT * n + 8, "n={n}: {size}");
            assert_eq!(size, trios_twoway_dfa(n, 5).unwrap().state_count());
        }
    }
}
