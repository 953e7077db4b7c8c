//! Seeded example scripts.

use ordlen::monomial::default_names;
use ordlen::oracle::{random_chain, Profile};
use ordlen::MonomialIdeal;

fn body(ideal: &MonomialIdeal, names: &[String]) -> String {
    if ideal.is_zero() {
        return "0".into();
    }
    ideal
        .gens()
        .iter()
        .map(|g| g.render(names))
        .collect::<Vec<_>>()
        .join(", ")
}

/// A script over a random chain `I ⊆ K ⊆ J` drawn from `seed`.
pub fn sample_script(seed: u64) -> String {
    let chain = random_chain(seed, Profile::DEFAULT);
    let names = default_names(chain.lower.ambient());
    let mut s = format!("# seed {seed}\nring {}\n", names.join(", "));
    s += &format!("I = {}\n", body(&chain.lower, &names));
    s += &format!("K = {}\n", body(&chain.middle, &names));
    s += &format!("J = {}\n", body(&chain.upper, &names));
    for cmd in [
        "len J/I",
        "cycle J/I",
        "ass J/I",
        "open J/I K",
        "closure J/I K",
        "filtration J/I",
    ] {
        s += cmd;
        s.push('\n');
    }
    s
}
