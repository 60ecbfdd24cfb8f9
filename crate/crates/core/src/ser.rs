//! Serde helpers shared by report types.

use serde::Serializer;

/// Writes integral floats as JSON integers (`5` rather than `5.0`) so that
/// reports echo user input the way it was typed.
pub fn compact_f64<S: Serializer>(value: &f64, serializer: S) -> Result<S::Ok, S::Error> {
    let v = *value;
    if v.is_finite() && v.fract() == 0.0 && v.abs() < 9.007_199_254_740_992e15 {
        if v >= 0.0 {
            serializer.serialize_u64(v as u64)
        } else {
            serializer.serialize_i64(v as i64)
        }
    } else {
        serializer.serialize_f64(v)
    }
}
