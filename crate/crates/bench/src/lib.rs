//! Fixtures shared by the benchmarks.

use sepcode::{
    build_length3, coalition_feasible_set, one_hot_compose, optimal_s, Coalition, Code, FeasibleSet,
};

/// The length-3 code over `q` symbols with the size-maximizing `s`.
pub fn length3(q: u32) -> Code {
    let plan = optimal_s(q).expect("q >= 4");
    build_length3(q, plan.s).expect("table parameters are valid")
}

/// Binary one-hot image of [`length3`] with the feasible set left by its
/// first and last codewords.
pub fn traced_instance(q: u32) -> (Code, FeasibleSet) {
    let code = one_hot_compose(&length3(q));
    let coalition = Coalition::new(&code, vec![0, code.size() - 1]).expect("indices in range");
    let r = coalition_feasible_set(&code, &coalition).expect("binary code");
    (code, r)
}
