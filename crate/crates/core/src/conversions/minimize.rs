use std::collections::{HashMap, HashSet, VecDeque};

use crate::automata::Dfa;

/// Language-minimal DFA in canonical (breadth-first) state order.
///
/// The machine is completed first; afterwards a non-accepting absorbing
/// class is dropped again (its transitions become undefined) unless it is
/// the initial state, so the size matches the partial-DFA convention.
pub fn dfa_minimize(dfa: &Dfa) -> Dfa {
    let (full, _) = dfa.complete();
    let sigma = full.alphabet().len();
    let reach = reachable(&full);
    let states: Vec<usize> = (0..full.state_count()).filter(|&q| reach[q]).collect();

    let mut class: Vec<usize> = vec![usize::MAX; full.state_count()];
    for &q in &states {
        class[q] = usize::from(full.is_accepting(q));
    }
    let mut count = 0;
    loop {
        let mut ids: HashMap<(usize, Vec<usize>), usize> = HashMap::new();
        let mut next = vec![usize::MAX; full.state_count()];
        for &q in &states {
            let sig = (0..sigma).map(|a| class[full.next(q, a).expect("complete")]).collect();
            let fresh = ids.len();
            next[q] = *ids.entry((class[q], sig)).or_insert(fresh);
        }
        let stable = ids.len() == count;
        count = ids.len();
        class = next;
        if stable {
            break;
        }
    }

    // canonical numbering: breadth-first from the initial class
    let mut order: HashMap<usize, usize> = HashMap::new();
    let mut rep: Vec<usize> = Vec::new();
    let mut queue = VecDeque::from([full.initial()]);
    order.insert(class[full.initial()], 0);
    rep.push(full.initial());
    while let Some(q) = queue.pop_front() {
        for a in 0..sigma {
            let t = full.next(q, a).expect("complete");
            if let std::collections::hash_map::Entry::Vacant(e) = order.entry(class[t]) {
                e.insert(rep.len());
                rep.push(t);
                queue.push_back(t);
            }
        }
    }
    let n = rep.len();
    let target = |q: usize, a: usize| order[&class[full.next(q, a).expect("complete")]];
    let dead = (1..n).find(|&c| {
        let q = rep[c];
        !full.is_accepting(q) && (0..sigma).all(|a| target(q, a) == c)
    });
    let keep: Vec<usize> = (0..n).filter(|&c| Some(c) != dead).collect();
    let renumber = |c: usize| keep.iter().position(|&k| k == c);
    let mut delta = Vec::with_capacity(keep.len() * sigma);
    let mut accepting = Vec::with_capacity(keep.len());
    for &c in &keep {
        let q = rep[c];
        accepting.push(full.is_accepting(q));
        for a in 0..sigma {
            delta.push(renumber(target(q, a)));
        }
    }
    Dfa::from_table(full.alphabet().clone(), 0, accepting, delta).expect("quotient of a valid DFA")
}

fn reachable(dfa: &Dfa) -> Vec<bool> {
    let mut seen = vec![false; dfa.state_count()];
    let mut stack = vec![dfa.initial()];
    seen[dfa.initial()] = true;
    while let Some(q) = stack.pop() {
        for a in 0..dfa.alphabet().len() {
            if let Some(t) = dfa.next(q, a) {
                if !seen[t] {
                    seen[t] = true;
                    stack.push(t);
                }
            }
        }
    }
    seen
}

/// Language equality by breadth-first search of the product machine.
///
/// Machines over different alphabets are never equivalent.
pub fn dfa_equivalent(a: &Dfa, b: &Dfa) -> bool {
    if a.alphabet() != b.alphabet() {
        return false;
    }
    let (a, _) = a.complete();
    let (b, _) = b.complete();
    let mut seen = HashSet::from([(a.initial(), b.initial())]);
    let mut queue = VecDeque::from([(a.initial(), b.initial())]);
    while let Some((p, q)) = queue.pop_front() {
        if a.is_accepting(p) != b.is_accepting(q) {
            return false;
        }
        for s in 0..a.alphabet().len() {
            let pair = (a.next(p, s).expect("complete"), b.next(q, s).expect("complete"));
            if seen.insert(pair) {
                queue.push_back(pair);
            }
        }
    }
    true
}
