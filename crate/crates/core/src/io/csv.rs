use crate::analysis::{GroupBallRow, SpectrumRow};

use super::fmt_f64;

pub fn spectrum_csv(rows: &[SpectrumRow]) -> String {
    let mut out = String::from("level,diameter,tile_count,orientation_count\n");
    for r in rows {
        out.push_str(&format!(
            "{},{},{},{}\n",
            r.level,
            fmt_f64(r.diameter),
            r.tile_count,
            r.orientation_count
        ));
    }
    out
}

pub fn group_csv(rows: &[GroupBallRow]) -> String {
    let mut out = String::from("word_length,distinct_elements,closed\n");
    for r in rows {
        out.push_str(&format!("{},{},{}\n", r.word_length, r.distinct_elements, r.closed));
    }
    out
}
