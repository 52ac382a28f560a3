//! The crate ships a dataset of quadrinomials whose smallest factor degree
//! is at least 3, each with an explicit witness factor. Every row is
//! re-verified from scratch: the factor divides, no rational root exists, the
//! complete quadratic sweep comes back empty, and (within the oracle's degree
//! range) no smaller factor of any degree exists.
//!
//! Run with: cargo run --example table_verification

use quadfactor::table::{builtin_rows, verify_rows, Attribution};

fn main() {
    let rows = builtin_rows();
    println!("{} rows shipped", rows.len());

    let mut by_attr = [0usize; 3];
    for row in &rows {
        match row.attribution {
            Attribution::New => by_attr[0] += 1,
            Attribution::Jankauskas => by_attr[1] += 1,
            Attribution::Walsh => by_attr[2] += 1,
        }
    }
    println!(
        "attribution: {} new, {} jankauskas, {} walsh\n",
        by_attr[0], by_attr[1], by_attr[2]
    );

    let reports = verify_rows(&rows).unwrap();
    for r in &reports {
        println!("{}", r.display_line());
    }

    let passed = reports.iter().filter(|r| r.pass).count();
    let skipped = reports
        .iter()
        .filter(|r| r.oracle_certificate.is_none())
        .count();
    println!(
        "\n{passed}/{} rows pass ({} above the oracle degree cap keep their divide and sweep checks)",
        reports.len(),
        skipped
    );
    assert_eq!(passed, reports.len());
}
