"""FastAPI application exposing the analysis pipeline over HTTP.

The service is a thin wrapper: every endpoint defers to the library and
returns either the canonical report document or a cohort CSV. Domain
errors map to 400 with the same machine-readable codes the CLI prints.
"""

from fastapi import FastAPI, Request
from fastapi.responses import HTMLResponse, JSONResponse

from .._version import __version__
from ..cohort import (
    corpus_stats,
    group_language_averages,
    group_language_csv,
    stats_csv,
    student_language_averages,
    student_language_csv,
    week_csv,
    week_progression,
    week_slope,
)
from ..errors import TalkmeterError
from ..htmlpage import render_html
from ..meta import load_meta
from ..metrics import VolatilityConfig
from ..report import (
    AnalysisOptions,
    analyze_vtt,
    report_from_doc,
    report_to_doc,
)
from .schemas import (
    AggregateRequest,
    AggregateResponse,
    AnalyzeRequest,
    ErrorOut,
    HealthOut,
    ReportOut,
    model_dump,
)

RATE_MODES = {"per-minute": "per_minute", "none": "none"}


def _options(req: AnalyzeRequest) -> AnalysisOptions:
    cfg = req.config
    return AnalysisOptions(
        volatility=VolatilityConfig(
            duration_mode=cfg.duration_mode,
            series_unit=cfg.series_unit,
            rate_scale_mode=RATE_MODES[cfg.rate_scale],
            min_points=cfg.min_turns,
        ),
        gap_break_s=cfg.gap_break_s,
        exclude_unknown_speaker=cfg.exclude_unknown_speaker,
    )


def _analyze(req: AnalyzeRequest):
    meta = load_meta(model_dump(req.meta))
    return analyze_vtt(req.vtt.encode("utf-8"), meta, _options(req))


def create_app() -> FastAPI:
    app = FastAPI(
        title="talkmeter",
        version=__version__,
        description="Conversational volatility analytics for speaker-attributed "
                    "WebVTT transcripts.",
    )

    @app.exception_handler(TalkmeterError)
    async def _domain_error(request: Request, exc: TalkmeterError):
        body = ErrorOut(code=exc.code, message=exc.message)
        return JSONResponse(status_code=400, content=model_dump(body))

    @app.exception_handler(ValueError)
    async def _value_error(request: Request, exc: ValueError):
        body = ErrorOut(code="BAD_CONFIG", message=str(exc))
        return JSONResponse(status_code=400, content=model_dump(body))

    @app.get("/health", response_model=HealthOut)
    def health():
        return HealthOut(status="ok", version=__version__)

    @app.post("/analyze", response_model=ReportOut)
    def analyze(req: AnalyzeRequest):
        return report_to_doc(_analyze(req))

    @app.post("/analyze/html", response_class=HTMLResponse)
    def analyze_html(req: AnalyzeRequest):
        return HTMLResponse(render_html(_analyze(req)))

    @app.post("/aggregate", response_model=AggregateResponse)
    def aggregate(req: AggregateRequest):
        try:
            reports = [report_from_doc(doc) for doc in req.reports]
        except ValueError as exc:
            raise TalkmeterError(f"unreadable report document: {exc}") from exc
        slope = None
        if req.by == "group-language":
            text = group_language_csv(group_language_averages(
                reports, req.language, weighted=req.duration_weighted))
        elif req.by == "student-language":
            text = student_language_csv(student_language_averages(
                reports, req.language, weighted=req.duration_weighted))
        elif req.by == "week":
            rows = week_progression(reports, req.language)
            text = week_csv(rows)
            slope = week_slope(rows)
        else:
            text = stats_csv(corpus_stats(reports))
        return AggregateResponse(
            by=req.by, n_reports=len(reports), csv=text, slope=slope)

    return app


app = create_app()
