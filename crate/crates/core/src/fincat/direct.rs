//! Finite directness: acyclicity of the non-identity morphism graph and the
//! count of composable chains (= nondegenerate nerve simplices).

use super::FinCat;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DirectnessReport {
    pub is_direct: bool,
    /// Number of composable chains of non-identity morphisms, counting the
    /// empty chain at each object. None when the category is not direct.
    pub chain_count: Option<u64>,
    pub witness: Option<String>,
}

/// A category is finite direct iff its non-identity morphisms form an
/// acyclic graph: no non-identity endomorphisms and no cycles through
/// distinct objects.
pub fn is_finite_direct(cat: &FinCat) -> DirectnessReport {
    let n = cat.object_count();
    let mut out = vec![Vec::new(); n];
    for m in cat.mor_ids() {
        if cat.is_identity(m) {
            continue;
        }
        let mor = cat.mor(m);
        if mor.src == mor.tgt {
            return DirectnessReport {
                is_direct: false,
                chain_count: None,
                witness: Some(format!("non-identity endomorphism {}", cat.mor_label(m))),
            };
        }
        out[mor.src].push((m, mor.tgt));
    }

    // Cycle detection over objects.
    let mut state = vec![0u8; n]; // 0 unvisited, 1 active, 2 done
    let mut stack: Vec<(usize, usize)> = Vec::new();
    for root in 0..n {
        if state[root] != 0 {
            continue;
        }
        stack.push((root, 0));
        state[root] = 1;
        while let Some(&mut (x, ref mut next)) = stack.last_mut() {
            if *next < out[x].len() {
                let (_, y) = out[x][*next];
                *next += 1;
                match state[y] {
                    0 => {
                        state[y] = 1;
                        stack.push((y, 0));
                    }
                    1 => {
                        return DirectnessReport {
                            is_direct: false,
                            chain_count: None,
                            witness: Some(format!("cycle through {}", cat.object_label(y))),
                        };
                    }
                    _ => {}
                }
            } else {
                state[x] = 2;
                stack.pop();
            }
        }
    }

    // chains(x) = 1 + sum over non-identity f: x -> y of chains(y),
    // evaluated in reverse topological order.
    let mut order: Vec<usize> = Vec::with_capacity(n);
    let mut seen = vec![false; n];
    fn visit(x: usize, out: &[Vec<(usize, usize)>], seen: &mut [bool], order: &mut Vec<usize>) {
        if seen[x] {
            return;
        }
        seen[x] = true;
        for &(_, y) in &out[x] {
            visit(y, out, seen, order);
        }
        order.push(x);
    }
    for x in 0..n {
        visit(x, &out, &mut seen, &mut order);
    }
    let mut chains = vec![0u128; n];
    for &x in &order {
        let mut total: u128 = 1;
        for &(_, y) in &out[x] {
            total += chains[y];
        }
        chains[x] = total;
    }
    let total: u128 = chains.iter().sum();
    DirectnessReport {
        is_direct: true,
        chain_count: Some(u64::try_from(total).expect("chain count fits in u64")),
        witness: None,
    }
}
