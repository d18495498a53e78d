//! The performance rule catalog: 21 matchers over parsed source units.
//!
//! Every matcher is method- or class-local pattern matching on the statement
//! tree and token stream; there is no cross-file analysis. Units that fail
//! to parse are UNANALYZABLE rather than analyzed on a best-effort basis.

mod builders;
mod context;
mod loops;
mod misc;
mod strings;

pub use context::Ctx;

use crate::syntax::SourceUnit;
use serde::{Deserialize, Serialize};
use std::fmt;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum RuleId {
    UseStringBufferForStringAppends,
    AddEmptyString,
    AppendCharacterWithChar,
    RedundantFieldInitializer,
    AvoidInstantiatingObjectsInLoops,
    AvoidArrayLoops,
    UseIndexOfChar,
    StringInstantiation,
    InefficientStringBuffering,
    AvoidUsingShortType,
    TooFewBranchesForASwitchStatement,
    IntegerInstantiation,
    UselessStringValueOf,
    ConsecutiveAppendsShouldReuse,
    InefficientEmptyStringCheck,
    StringToString,
    InsufficientStringBufferDeclaration,
    SimplifyStartsWith,
    ConsecutiveLiteralAppends,
    OptimizableToArrayCall,
    BooleanInstantiation,
}

impl RuleId {
    pub fn name(&self) -> &'static str {
        match self {
            RuleId::UseStringBufferForStringAppends => "UseStringBufferForStringAppends",
            RuleId::AddEmptyString => "AddEmptyString",
            RuleId::AppendCharacterWithChar => "AppendCharacterWithChar",
            RuleId::RedundantFieldInitializer => "RedundantFieldInitializer",
            RuleId::AvoidInstantiatingObjectsInLoops => "AvoidInstantiatingObjectsInLoops",
            RuleId::AvoidArrayLoops => "AvoidArrayLoops",
            RuleId::UseIndexOfChar => "UseIndexOfChar",
            RuleId::StringInstantiation => "StringInstantiation",
            RuleId::InefficientStringBuffering => "InefficientStringBuffering",
            RuleId::AvoidUsingShortType => "AvoidUsingShortType",
            RuleId::TooFewBranchesForASwitchStatement => "TooFewBranchesForASwitchStatement",
            RuleId::IntegerInstantiation => "IntegerInstantiation",
            RuleId::UselessStringValueOf => "UselessStringValueOf",
            RuleId::ConsecutiveAppendsShouldReuse => "ConsecutiveAppendsShouldReuse",
            RuleId::InefficientEmptyStringCheck => "InefficientEmptyStringCheck",
            RuleId::StringToString => "StringToString",
            RuleId::InsufficientStringBufferDeclaration => "InsufficientStringBufferDeclaration",
            RuleId::SimplifyStartsWith => "SimplifyStartsWith",
            RuleId::ConsecutiveLiteralAppends => "ConsecutiveLiteralAppends",
            RuleId::OptimizableToArrayCall => "OptimizableToArrayCall",
            RuleId::BooleanInstantiation => "BooleanInstantiation",
        }
    }

    pub fn from_name(name: &str) -> Option<RuleId> {
        CATALOG.iter().map(|(r, _)| *r).find(|r| r.name() == name)
    }

    pub const RULESET: &'static str = "PERFORMANCE";
}

impl fmt::Display for RuleId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// A rule match at a source line.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Violation {
    pub rule: RuleId,
    pub line: u32,
    pub message: String,
}

impl Violation {
    pub fn new(rule: RuleId, line: u32, message: impl Into<String>) -> Violation {
        Violation {
            rule,
            line,
            message: message.into(),
        }
    }
}

type Matcher = fn(&Ctx<'_>) -> Vec<Violation>;

/// The full catalog in Table-3 order (by original violation frequency).
pub const CATALOG: [(RuleId, Matcher); 21] = [
    (
        RuleId::UseStringBufferForStringAppends,
        strings::use_string_buffer_for_string_appends,
    ),
    (RuleId::AddEmptyString, strings::add_empty_string),
    (
        RuleId::AppendCharacterWithChar,
        builders::append_character_with_char,
    ),
    (
        RuleId::RedundantFieldInitializer,
        misc::redundant_field_initializer,
    ),
    (
        RuleId::AvoidInstantiatingObjectsInLoops,
        loops::avoid_instantiating_objects_in_loops,
    ),
    (RuleId::AvoidArrayLoops, loops::avoid_array_loops),
    (RuleId::UseIndexOfChar, strings::use_index_of_char),
    (RuleId::StringInstantiation, strings::string_instantiation),
    (
        RuleId::InefficientStringBuffering,
        builders::inefficient_string_buffering,
    ),
    (RuleId::AvoidUsingShortType, misc::avoid_using_short_type),
    (
        RuleId::TooFewBranchesForASwitchStatement,
        misc::too_few_branches_for_a_switch_statement,
    ),
    (RuleId::IntegerInstantiation, misc::integer_instantiation),
    (RuleId::UselessStringValueOf, strings::useless_string_value_of),
    (
        RuleId::ConsecutiveAppendsShouldReuse,
        builders::consecutive_appends_should_reuse,
    ),
    (
        RuleId::InefficientEmptyStringCheck,
        strings::inefficient_empty_string_check,
    ),
    (RuleId::StringToString, strings::string_to_string),
    (
        RuleId::InsufficientStringBufferDeclaration,
        builders::insufficient_string_buffer_declaration,
    ),
    (RuleId::SimplifyStartsWith, strings::simplify_starts_with),
    (
        RuleId::ConsecutiveLiteralAppends,
        builders::consecutive_literal_appends,
    ),
    (
        RuleId::OptimizableToArrayCall,
        misc::optimizable_to_array_call,
    ),
    (RuleId::BooleanInstantiation, misc::boolean_instantiation),
];

/// Run the whole catalog. None when the unit is unanalyzable (parse failed).
pub fn analyze(unit: &SourceUnit) -> Option<Vec<Violation>> {
    if !unit.parse_status.is_ok() {
        return None;
    }
    let ctx = Ctx::new(unit);
    let mut violations: Vec<Violation> = CATALOG
        .iter()
        .flat_map(|(_, matcher)| matcher(&ctx))
        .collect();
    sort_violations(&mut violations);
    Some(violations)
}

/// Run a single rule. The unit must have parsed.
pub fn evaluate_rule(rule: RuleId, unit: &SourceUnit) -> Vec<Violation> {
    debug_assert!(unit.parse_status.is_ok());
    let ctx = Ctx::new(unit);
    let matcher = CATALOG
        .iter()
        .find(|(r, _)| *r == rule)
        .map(|(_, m)| m)
        .expect("rule is in the catalog");
    let mut violations = matcher(&ctx);
    sort_violations(&mut violations);
    violations
}

pub fn sort_violations(violations: &mut [Violation]) {
    violations.sort_by(|a, b| (a.line, a.rule.name()).cmp(&(b.line, b.rule.name())));
}
