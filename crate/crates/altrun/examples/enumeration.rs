//! Brute-force permutation statistics: alternating runs, up-down runs,
//! descents, and the distributions they generate.
//!
//! ```text
//! cargo run --example enumeration
//! ```

use altrun::enumerate::{
    distribution, word_stat, Class, Stat, Word, WordStat,
};

fn main() {
    // The worked statistics of a single word.
    let w = Word::new(vec![8, 2, 3, 1, 5, 4, 6, 7]).unwrap();
    println!("word 82315467:");
    println!("  alternating runs: {}", word_stat(&w, WordStat::Run));
    println!("  up-down runs:     {}", word_stat(&w, WordStat::UdRun));
    println!("  descents:         {}", word_stat(&w, WordStat::Des));

    // Distributions over the whole symmetric group.
    println!();
    for n in 1..=6 {
        let run = distribution(n, Class::Perm, Stat::Word(WordStat::Run)).unwrap();
        let udrun = distribution(n, Class::Perm, Stat::Word(WordStat::UdRun)).unwrap();
        println!("n = {n}");
        println!("  R_{n}(x) = {run}");
        println!("  S_{n}(x) = {udrun}");
    }

    // Descents, excedances and drops are equidistributed.
    println!();
    let des = distribution(5, Class::Perm, Stat::Word(WordStat::Des)).unwrap();
    let exc = distribution(5, Class::Perm, Stat::Word(WordStat::Exc)).unwrap();
    let drop = distribution(5, Class::Perm, Stat::Word(WordStat::Drop)).unwrap();
    assert_eq!(des, exc);
    assert_eq!(des, drop);
    println!("descents = excedances = drops over S_5: {des}");
}
