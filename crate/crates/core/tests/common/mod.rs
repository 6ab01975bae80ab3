use braidlink::braid::BraidWord;
use braidlink::quandle::{fundamental_presentation, FiniteQuandle};

/// Solutions of the presentation relations `x_k = x_i ∗ x_j` by brute force
/// over `Q^{arcs}`.
pub fn presentation_oracle(w: &BraidWord, q: &FiniteQuandle) -> u64 {
    let p = fundamental_presentation(w);
    let order = q.order();
    let total = (order as u64).pow(p.generators as u32);
    let mut count = 0;
    let mut x = vec![0usize; p.generators];
    for _ in 0..total {
        if p.relations.iter().all(|&(k, i, j)| x[k] == q.op(x[i], x[j])) {
            count += 1;
        }
        for c in x.iter_mut() {
            *c += 1;
            if *c < order {
                break;
            }
            *c = 0;
        }
    }
    count
}
