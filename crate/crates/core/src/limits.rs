//! Process-wide size caps and worker count.
//!
//! Exhaustive operations refuse inputs above these caps with
//! [`Error::Resource`](crate::Error::Resource) instead of running for hours.

use std::sync::atomic::{AtomicUsize, Ordering};

use crate::error::{Error, Result};

/// Default cap for materializing a full rank table.
pub const DEFAULT_TABLE_CAP: usize = 22;
/// Default cap for whole-powerset scans.
pub const DEFAULT_SCAN_CAP: usize = 16;

static TABLE_CAP: AtomicUsize = AtomicUsize::new(DEFAULT_TABLE_CAP);
static SCAN_CAP: AtomicUsize = AtomicUsize::new(DEFAULT_SCAN_CAP);
static THREADS: AtomicUsize = AtomicUsize::new(1);

pub fn table_cap() -> usize {
    TABLE_CAP.load(Ordering::Relaxed)
}

/// Values above 26 are clamped; a table that large no longer fits in memory
/// comfortably.
pub fn set_table_cap(n: usize) {
    TABLE_CAP.store(n.min(26), Ordering::Relaxed);
}

pub fn scan_cap() -> usize {
    SCAN_CAP.load(Ordering::Relaxed)
}

pub fn set_scan_cap(n: usize) {
    SCAN_CAP.store(n.min(table_cap()), Ordering::Relaxed);
}

/// Number of worker threads used by parallel scans (at least 1).
pub fn threads() -> usize {
    THREADS.load(Ordering::Relaxed).max(1)
}

pub fn set_threads(n: usize) {
    THREADS.store(n.max(1), Ordering::Relaxed);
}

pub(crate) fn check_scan(n: usize, what: &str) -> Result<()> {
    if n > scan_cap() {
        return Err(Error::resource(
            what,
            format!("ground set has {n} elements, exhaustive scan cap is {}", scan_cap()),
        ));
    }
    Ok(())
}

pub(crate) fn check_table(n: usize, what: &str) -> Result<()> {
    if n > table_cap() {
        return Err(Error::resource(
            what,
            format!("ground set has {n} elements, rank table cap is {}", table_cap()),
        ));
    }
    Ok(())
}
