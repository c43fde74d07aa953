//! Recompute the bundled reference tables and print the report.
//!
//! Run with: cargo run -p cycloswan --example verify_tables
//!
//! Rows of the Swan table above m = 37 are skipped here: factoring
//! p^phi(m) - 1 at that size wants an explicit time budget (see the
//! `cycloswan verify --max-m 97 --time-budget 60` command for the stretch).

use cycloswan::swan::{verify_reference_tables, RowStatus, VerifyOptions};

fn main() {
    let report = verify_reference_tables(&VerifyOptions::default(), None);

    for row in &report.rows {
        println!(
            "[{:>11}] m={:<3} p={:<3} {:<10} expected {:<24} computed {}",
            row.table.to_string(),
            row.m,
            row.p,
            row.status.to_string(),
            row.expected,
            row.computed
        );
    }
    println!();
    for note in &report.notes {
        println!("note: {note}");
    }
    let (pass, fail, skipped, incomplete) = report.counts();
    println!("\n{pass} passed, {fail} failed, {skipped} skipped, {incomplete} incomplete");
    assert!(report.passed(), "bundled tables must verify");

    let attempted: Vec<_> = report
        .rows
        .iter()
        .filter(|r| r.status != RowStatus::Skipped)
        .collect();
    println!("({} rows attempted)", attempted.len());
}
