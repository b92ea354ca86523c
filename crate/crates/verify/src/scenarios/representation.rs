use g2rep::chevalley::relations;
use g2rep::chevalley_matrices;

use crate::CheckReport;

/// Bracket, Serre and weight relations of the six Chevalley matrices.
pub fn run() -> Vec<CheckReport> {
    relations(&chevalley_matrices())
        .into_iter()
        .map(|(name, ok)| {
            let id = format!("representation.{name}");
            CheckReport::outcome(id, "Chevalley matrices satisfy the G2 presentation", ok, format!("{name} exactly"), None)
        })
        .collect()
}
