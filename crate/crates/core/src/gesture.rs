//! The four-class gesture taxonomy.

use serde::{Deserialize, Serialize};
use std::fmt;
use std::str::FromStr;

/// Gesture class of a sequence. Integer codes are fixed and used for class
/// ordering, tie-breaking, and confusion-matrix indexing.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum GestureClass {
    Stop = 0,
    Go = 1,
    ThankGreet = 2,
    NoGesture = 3,
}

impl GestureClass {
    pub const COUNT: usize = 4;
    pub const ALL: [GestureClass; 4] = [
        GestureClass::Stop,
        GestureClass::Go,
        GestureClass::ThankGreet,
        GestureClass::NoGesture,
    ];

    /// Fixed integer code: Stop=0, Go=1, ThankGreet=2, NoGesture=3.
    pub fn code(self) -> usize {
        self as usize
    }

    pub fn from_code(code: usize) -> Option<GestureClass> {
        Self::ALL.get(code).copied()
    }

    /// Label string used in manifests and feature tables.
    pub fn label(self) -> &'static str {
        match self {
            GestureClass::Stop => "stop",
            GestureClass::Go => "go",
            GestureClass::ThankGreet => "thank_greet",
            GestureClass::NoGesture => "no_gesture",
        }
    }
}

impl fmt::Display for GestureClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

impl FromStr for GestureClass {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "stop" => Ok(GestureClass::Stop),
            "go" => Ok(GestureClass::Go),
            "thank_greet" => Ok(GestureClass::ThankGreet),
            "no_gesture" => Ok(GestureClass::NoGesture),
            other => Err(format!(
                "unknown gesture label {other:?} (expected stop|go|thank_greet|no_gesture)"
            )),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn codes_are_fixed() {
        assert_eq!(GestureClass::Stop.code(), 0);
        assert_eq!(GestureClass::Go.code(), 1);
        assert_eq!(GestureClass::ThankGreet.code(), 2);
        assert_eq!(GestureClass::NoGesture.code(), 3);
        for c in GestureClass::ALL {
            assert_eq!(GestureClass::from_code(c.code()), Some(c));
        }
    }

    #[test]
    fn label_round_trip() {
        for c in GestureClass::ALL {
            assert_eq!(c.label().parse::<GestureClass>().unwrap(), c);
        }
        assert!("wave".parse::<GestureClass>().is_err());
    }

    #[test]
    fn serde_uses_snake_case_labels() {
        let json = serde_json::to_string(&GestureClass::ThankGreet).unwrap();
        assert_eq!(json, "\"thank_greet\"");
    }
}
