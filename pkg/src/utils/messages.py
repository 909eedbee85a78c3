"""
messages.py

Central repository for all user-facing and log-facing text strings used
throughout the Restriction Stability Toolkit.

Organisation
------------
Messages are grouped into classes by subsystem:

SystemMessages
    CLI lifecycle events (start, subcommand dispatch, exit codes).
LatticeMessages
    Surface and Chern-character validation.
WallMessages
    Wall construction and closed-form cross-checks.
CriteriaMessages
    Criterion evaluation, sweeps and cross-check discrepancies.
ExceptionalMessages
    Dyadic generation, interval search and orthogonal invariants on P².
CohomologyMessages
    Betti tables, exact-sequence cases and Brill-Noether reports.
DocumentMessages
    Input document parsing diagnostics.
ExportMessages
    CSV/JSON/table/SVG writers.
ConfigMessages
    Profile load/save events.

Usage::

    from src.utils import messages
    logger.warning(messages.WallMessages.closed_forms_disagree.format(...))

Dynamic messages (those containing ``{placeholder}`` fields) must be
formatted with ``.format()`` before use.
"""


class SystemMessages:
    """CLI lifecycle messages."""
    app_start = "Restriction stability toolkit started: {command}"
    input_error = "ERROR: {error}"
    undetermined = "UNDETERMINED: case {case}: {error}"
    exit_code = "Exit code {code} for {command}."


class LatticeMessages:
    """Surface and Chern-character messages."""
    dimension_mismatch = "Divisor class has {got} coefficients; surface has Picard rank {expected}."
    not_symmetric = "Intersection matrix is not symmetric: {matrix}"
    bad_hirzebruch = "Hirzebruch parameter must be a positive integer, got {m}."
    custom_no_ampleness = "Custom surface has no ampleness oracle; H is assumed ample."
    rank_zero = "{quantity} is undefined for rank 0."
    non_positive_h = "H·H = {value} is not positive."
    wrong_surface = "{operation} is only defined on {expected}."
    not_sheaf_like = "Character {character} is not sheaf-like: {reason}."


class WallMessages:
    """Wall geometry messages."""
    slope_equals_s = "Bridgeland slope undefined: mu = s = {s}."
    zero_imaginary = "Rank-0 slope undefined: H·ch1 = 0."
    non_positive_hc = "H·C = {value} is not positive."
    degenerate = "Nesting needs two semicircles, got {first} and {second}."
    rank_too_small = "{operation} needs rank >= {minimum}, got {rank}."
    closed_forms_disagree = (
        "Restriction wall centers disagree for C = {curve}: generic {generic}, "
        "mu - C.H/(2H^2) gives {preliminaries}."
    )


class CriteriaMessages:
    """Criterion evaluation messages."""
    bad_degree = "Curve degree must be >= 1, got {d}."
    evaluated = "{criterion} at d={d}: lhs={lhs} rhs={rhs} satisfied={satisfied}"
    not_found = "{criterion}: no qualifying degree up to {d_max}."
    not_picard_rank_two = "M(v) Picard rank 2 fails: Delta = {delta} <= delta(mu) = {dlp}."
    picard_rank_reported = "Picard rank 2 of M(v) not established (Delta = {delta}, delta(mu) = {dlp})"
    not_ample = "H = {polarization} is not ample on {surface}."
    lemma_discrepancy = (
        "Hirzebruch lemma and general-surface verdicts differ at d={d}: "
        "lemma {lemma}, theorem {theorem}."
    )
    sweep_row = "Sweep {criterion} d={d} -> {satisfied}"


class ExceptionalMessages:
    """Exceptional-slope machinery messages."""
    bad_dyadic = "Dyadic address {p}/2^{q} is not in lowest terms."
    depth_exceeded = "No interval I_alpha contains {value} up to depth {depth}."
    depth_capped = "Requested depth {depth} exceeds the configured bound {bound}."
    no_real_root = "5 + 8·Delta = {value} < 0: Q_v never reaches Delta = 1/2."
    singular_case = "Orthogonal invariants case ({case}) divides by zero for {character}."
    below_dlp = "Delta = {delta} lies below delta(mu) = {dlp}; M(v) is empty."
    negative_discriminant = "Bound needs Delta >= 0, got {delta}."
    bound_violated = "Informative bound violated: mu+ = {mu_plus} is not below {bound} for {character}."
    generated = "Generated exceptional slope eps({p}/2^{q}) = {alpha}"
    found_interval = "Value {value} lies in I_{alpha}."


class CohomologyMessages:
    """Betti tables and Brill-Noether messages."""
    branch = "Hirzebruch Betti branch {branch} after {peels} peel(s) for {character}."
    peel = "Peeling step {step}: nu·M = {nu_m}."
    non_termination = "Peeling exceeded {limit} steps."
    undetermined = "Connecting map rank unknown in case {case}."
    inconsistent = "Exact sequence inconsistent in case {case}: {detail}."
    hypothesis_failed = "Hypothesis failed: {hypothesis}."
    rank_too_small = "Betti table needs rank >= 2, got {rank}."
    bn_unavailable = "Unexpected-sections test unavailable: {error}"


class DocumentMessages:
    """Input document diagnostics."""
    bad_json = "Input is not valid JSON (line {line}, column {column}): {error}"
    missing_key = "Missing required key '{key}' in {section}."
    unknown_surface = "Unknown surface kind '{kind}'."
    bad_rational = "Invalid rational '{text}' at {location}: {reason}"
    bad_integer = "Expected an integer at {location}, got {value!r}."
    bad_curve = "Curve must be a divisor class list or {{\"dH\": d}} at {location}."
    bad_option = "Unsupported option value {value!r} for '{key}'."
    not_ample = "Polarization {polarization} is not ample on {surface}."


class ExportMessages:
    """Export messages."""
    unsupported_format = "Unsupported export format: {format}"
    written = "Wrote {path}"
    failed = "Export failed: {error}"


class ConfigMessages:
    """Profile management messages."""
    profile_loaded = "Loaded profile '{name}'."
    profile_saved = "Saved profile '{name}'."
    profile_missing = "Profile '{name}' not found; using defaults."
    profile_deleted = "Deleted profile '{name}'."
    profile_error = "Could not read profile '{name}': {error}"
