"""Crowd emotion monitoring over short-message streams.

Pipeline: lexicon-weighted bag-of-words classification of each message,
fixed-interval emotion rates, trailing moving-average z-scores with low/high
levels, and rule-based inference of active crowd groups, with alerting for
the dangerous ones.
"""

from .classifier import ClassifiedMessage, classify, dominant_emotion, message_vector
from .crowdmodel import (
    CrowdGroup,
    CrowdType,
    Inference,
    UndefinedLevelsError,
    group_members,
    infer_crowd,
)
from .emotions import EMOTIONS, ZERO_VECTOR, Emotion, EmotionVector
from .engine import (
    STATUS_INDETERMINATE,
    STATUS_NO_DATA,
    STATUS_OK,
    STATUS_WARMUP,
    WindowRecord,
    analyze_classified,
    analyze_messages,
)
from .ingest import (
    BoundingBox,
    EventFilter,
    Message,
    ParseStats,
    StreamFormatError,
    apply_filter,
    parse_instant,
    parse_stream,
    tokenize,
)
from .lexicon import (
    EmptyLexiconError,
    Lexicon,
    LexiconError,
    MalformedLineError,
    load_lexicon,
)
from .synth import (
    EmotionSchedule,
    GroundTruth,
    InfeasibleScheduleError,
    Phase,
    apportion,
    emotion_pools,
    generate_messages,
    load_schedule,
)
from .temporal import (
    AnalysisConfig,
    Level,
    WindowAnalyzer,
    WindowStats,
    assign_levels,
    compute_stats,
    default_origin,
    emotion_rates,
    partition_windows,
    zscore,
)

__version__ = "0.1.0"
