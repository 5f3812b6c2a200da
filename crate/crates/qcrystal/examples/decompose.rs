//! Decompose tensor powers into connected components and compare the
//! multiplicities with shifted standard tableau counts.
//!
//! Run with: cargo run -p qcrystal --example decompose

use qcrystal::character::shifted_syt_count;
use qcrystal::graph::{multiplicity_table, NodeBudget};
use qcrystal::Alphabet;

fn main() {
    let alphabet = Alphabet::new(3).unwrap();
    for power in 0..=6usize {
        let table = multiplicity_table(&alphabet, power, NodeBudget::default()).unwrap();
        let mut covered = 0usize;
        println!("B^⊗{power} (n=3):");
        for (lambda, m) in table.iter().rev() {
            println!(
                "  λ={:<9} multiplicity={} size={:<4} shifted SYT count={}",
                lambda.to_string(),
                m.count,
                m.component_size,
                shifted_syt_count(lambda)
            );
            assert_eq!(m.count as u64, shifted_syt_count(lambda));
            covered += m.count * m.component_size;
        }
        assert_eq!(covered, 3usize.pow(power as u32));
        println!("  total nodes {covered} = 3^{power}");
    }
}
