//! Stirling permutations, the duality map, and the statistic it
//! transports: flag ascent-plateaus on one side become alternating runs
//! on the other.
//!
//! ```text
//! cargo run --example stirling_duality
//! ```

use altrun::enumerate::{
    for_each_stirling_word, phi, stirling_stat, word_stat, StirlingStat, StirlingWord, WordStat,
};
use altrun::families::{family_uni, FamilyId, Method};

fn main() {
    println!("order-2 Stirling permutations and their duals:");
    for_each_stirling_word(2, |word| {
        let s = StirlingWord::new(word.to_vec()).unwrap();
        let dual = phi(&s);
        println!(
            "  {:?} -> {:?}   fap = {}, runs of dual = {}",
            s.entries(),
            dual.entries(),
            stirling_stat(&s, StirlingStat::Fap),
            word_stat(&dual, WordStat::Run),
        );
    });

    // The transported statistic generates the same polynomial both ways,
    // and the differential recurrence agrees with both.
    println!();
    for n in 1..=6 {
        let via_runs = family_uni(FamilyId::F, n, &Method::Enumeration).unwrap();
        let via_recurrence = family_uni(FamilyId::F, n, &Method::DiffRecurrence).unwrap();
        assert_eq!(via_runs, via_recurrence);
        println!("F_{n}(x) = {via_runs}");
    }
}
