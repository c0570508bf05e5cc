"""tweetfilter: harmful-content filtering timeline service.

Pipeline: labeled source files -> ingest (parse, label mapping, dedupe) ->
annotate (sentiment, language, bot score) -> filter store (tri-state
queries, meta projections) -> HTTP API (session auth, timeline, meta,
click telemetry).
"""

__version__ = "0.1.0"
