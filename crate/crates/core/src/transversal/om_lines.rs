use crate::combin::subsets_of;
use crate::error::{KneserError, Result};
use crate::om::{mask_of, restrict_circuits, Chirotope, SignedSet};

fn check_labels(chi: &Chirotope, labels: &[usize]) -> Result<()> {
    if labels.iter().any(|&l| l == 0 || l > chi.n()) {
        return Err(KneserError::invalid(format!("labels must lie in 1..={}", chi.n())));
    }
    if mask_of(labels).count_ones() as usize != labels.len() {
        return Err(KneserError::invalid("labels must be distinct"));
    }
    Ok(())
}

/// Whether the line through `pair` meets the triangle on `triple`, read off
/// the circuit on the five labels: the triple must be monochromatic.
pub fn stabs_triangle_om(chi: &Chirotope, pair: (usize, usize), triple: [usize; 3]) -> Result<bool> {
    if chi.rank() != 4 {
        return Err(KneserError::invalid("triangle test needs a rank-4 chirotope"));
    }
    let five = [pair.0, pair.1, triple[0], triple[1], triple[2]];
    check_labels(chi, &five)?;
    let circuit = uniform_circuit(chi, &five)
        .ok_or_else(|| KneserError::degenerate(format!("five labels {five:?} are not in general position")))?;
    let s = circuit.sign_of(triple[0]);
    Ok(circuit.sign_of(triple[1]) == s && circuit.sign_of(triple[2]) == s)
}

/// The circuit on a 5-set whose 4-subsets are all bases.
fn uniform_circuit(chi: &Chirotope, five: &[usize]) -> Option<SignedSet> {
    let mut s = five.to_vec();
    s.sort_unstable();
    let all_bases = (0..5).all(|j| {
        let t: Vec<usize> = s.iter().enumerate().filter(|&(i, _)| i != j).map(|(_, &x)| x).collect();
        chi.sign(&t) != 0
    });
    if all_bases {
        chi.circuit_on(&s)
    } else {
        None
    }
}

/// Whether the line spanned by `pair` meets the convex hull of `four`,
/// decided from circuits alone.
pub fn line_meets_hull_om(chi: &Chirotope, pair: (usize, usize), four: [usize; 4]) -> Result<bool> {
    let mut labels = vec![pair.0, pair.1];
    labels.extend(four);
    check_labels(chi, &labels)?;
    let circuits = chi.circuits_within(&labels);
    Ok(meets_with(&circuits, pair, &four))
}

/// Looks for a circuit C, in either orientation, with C ∩ four nonempty and
/// positive and C⁻ a nonempty subset of the pair. Every signed vector with
/// that sign pattern decomposes conformally into circuits, one of which
/// already has it.
fn meets_with(circuits: &[SignedSet], pair: (usize, usize), four: &[usize]) -> bool {
    let pm = mask_of(&[pair.0, pair.1]);
    let fm = mask_of(four);
    restrict_circuits(circuits, pm | fm).any(|c| {
        [*c, c.negated()].iter().any(|v| {
            let (p, n) = (v.pos_mask(), v.neg_mask());
            p & fm != 0 && n & fm == 0 && n != 0 && n & !pm == 0
        })
    })
}

/// The pairs {i, j} whose line meets the hull of every 4-subset of the
/// other labels: the complete transversal lines for k = 4.
pub fn complete_line_transversals_om(chi: &Chirotope) -> Result<Vec<(usize, usize)>> {
    if chi.rank() != 4 {
        return Err(KneserError::invalid(format!("complete line search needs rank 4, got {}", chi.rank())));
    }
    let n = chi.n();
    let uniform = chi.is_uniform();
    let circuits = if uniform { Vec::new() } else { chi.all_circuits() };
    let mut out = Vec::new();
    for i in 1..=n {
        for j in i + 1..=n {
            if !uniform && chi.rank_of(&[i, j]) < 2 {
                continue;
            }
            let rest: Vec<usize> = (1..=n).filter(|&l| l != i && l != j).collect();
            let all_met = subsets_of(&rest, 4).all(|f| {
                if uniform {
                    subsets_of(&f, 3).any(|t| {
                        let c = uniform_circuit(chi, &[i, j, t[0], t[1], t[2]]).expect("uniform chirotope");
                        c.sign_of(t[1]) == c.sign_of(t[0]) && c.sign_of(t[2]) == c.sign_of(t[0])
                    })
                } else {
                    meets_with(&circuits, (i, j), &f)
                }
            });
            if all_met {
                out.push((i, j));
            }
        }
    }
    Ok(out)
}
