//! Everything the single-permutation pipeline computes, in one serializable
//! record.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::perm::{avoids_barred_3bar142, Permutation};
use crate::piles::{rpw, xps, PileConfig};
use crate::rsk::{rsk, Tableau};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RunReport {
    pub permutation: Permutation,
    pub insertion_piles: PileConfig,
    pub recording_piles: PileConfig,
    pub insertion_tableau: Tableau,
    pub recording_tableau: Tableau,
    /// Reverse patience word of the insertion piles.
    pub rpw: Permutation,
    /// Whether the permutation itself avoids 3-1̄-42.
    pub avoids_3bar142: bool,
}

impl RunReport {
    pub fn of(p: &Permutation) -> Self {
        let (r, s) = xps(p);
        let (ip, rq) = rsk(p);
        RunReport {
            permutation: p.clone(),
            rpw: rpw(&r),
            insertion_piles: r,
            recording_piles: s,
            insertion_tableau: ip,
            recording_tableau: rq,
            avoids_3bar142: avoids_barred_3bar142(p),
        }
    }
}

fn columns(f: &mut fmt::Formatter<'_>, c: &PileConfig) -> fmt::Result {
    let parts: Vec<String> = c
        .columns()
        .iter()
        .map(|col| {
            let v: Vec<String> = col.iter().map(usize::to_string).collect();
            format!("[{}]", v.join(","))
        })
        .collect();
    writeln!(f, "  {}", parts.join(" "))
}

fn rows(f: &mut fmt::Formatter<'_>, t: &Tableau) -> fmt::Result {
    for row in t.rows() {
        let v: Vec<String> = row.iter().map(usize::to_string).collect();
        writeln!(f, "  {}", v.join(" "))?;
    }
    Ok(())
}

impl fmt::Display for RunReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "permutation  {}", self.permutation)?;
        writeln!(f, "R  insertion piles (bottom to top)")?;
        columns(f, &self.insertion_piles)?;
        writeln!(f, "S  recording piles (bottom to top)")?;
        columns(f, &self.recording_piles)?;
        writeln!(f, "P  insertion tableau")?;
        rows(f, &self.insertion_tableau)?;
        writeln!(f, "Q  recording tableau")?;
        rows(f, &self.recording_tableau)?;
        writeln!(f, "rpw(R)  {}", self.rpw)?;
        write!(
            f,
            "avoids 3-1bar-42  {}",
            if self.avoids_3bar142 { "yes" } else { "no" }
        )
    }
}
