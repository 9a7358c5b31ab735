"""HTTP JSON facade over the engine for the analyst UI and programmatic clients.

Every endpoint is stateless and idempotent; the optional scenario library
persists documents under a configured directory with per-name write locks.
Structural document problems return 400 with field paths, semantic/evaluation
failures return 422.
"""
from __future__ import annotations

import argparse
import re
import threading
from pathlib import Path
from typing import Any, Dict, Optional

from fastapi import Body, FastAPI, HTTPException
from fastapi.middleware.cors import CORSMiddleware
from fastapi.responses import Response

from . import __version__, engine, forecast
from .model import EvaluationError
from .scenario_io import (
    DocumentError,
    SchemaError,
    ValidationFailure,
    forecast_to_dict,
    import_external_outputs,
    parse_preferences,
    parse_requirements,
    parse_scenario,
    quadrant_to_dict,
    ranking_to_dict,
    result_to_dict,
    to_json_bytes,
)

_NAME_RE = re.compile(r"^[A-Za-z0-9._-]{1,64}$")


def _error_detail(exc: DocumentError) -> Dict[str, Any]:
    return {"message": str(exc), "violations": [
        {"path": path, "message": message} for path, message in exc.violations
    ]}


def _http_error(exc: Exception) -> HTTPException:
    if isinstance(exc, SchemaError):
        return HTTPException(status_code=400, detail=_error_detail(exc))
    if isinstance(exc, DocumentError):
        return HTTPException(status_code=422, detail=_error_detail(exc))
    return HTTPException(status_code=422, detail={"message": str(exc), "violations": []})


def _json_response(data: Dict[str, Any]) -> Response:
    # Shared serializer with the CLI so both surfaces are byte-identical.
    return Response(content=to_json_bytes(data), media_type="application/json")


def create_app(library_dir: Optional[str] = None) -> FastAPI:
    app = FastAPI(title="utem", version=__version__)
    app.add_middleware(
        CORSMiddleware, allow_origins=["*"], allow_methods=["*"], allow_headers=["*"]
    )
    library = Path(library_dir) if library_dir else None
    write_locks: Dict[str, threading.Lock] = {}
    locks_guard = threading.Lock()

    def _require(body: Dict[str, Any], field: str) -> Any:
        if field not in body:
            raise HTTPException(
                status_code=400,
                detail={"message": f"missing field {field!r}", "violations": [
                    {"path": f"$.{field}", "message": "required"}
                ]},
            )
        return body[field]

    @app.get("/api/v1/health")
    def health() -> Dict[str, Any]:
        return {"status": "ok", "service": "utem", "version": __version__}

    @app.post("/api/v1/evaluate")
    def evaluate(body: Dict[str, Any] = Body(...)) -> Response:
        try:
            composite = parse_scenario(_require(body, "scenario"))
            if body.get("overlay") is not None:
                composite = import_external_outputs(composite, body["overlay"])
            req = parse_requirements(_require(body, "requirements"))
            weights = parse_preferences(_require(body, "preferences"))
            result = engine.evaluate(composite, req, weights)
        except (DocumentError, EvaluationError) as exc:
            raise _http_error(exc)
        return _json_response(result_to_dict(result))

    @app.post("/api/v1/compare")
    def compare(body: Dict[str, Any] = Body(...)) -> Response:
        scenarios_raw = _require(body, "scenarios")
        if not isinstance(scenarios_raw, list) or not scenarios_raw:
            raise HTTPException(
                status_code=400,
                detail={"message": "scenarios must be a non-empty list", "violations": [
                    {"path": "$.scenarios", "message": "non-empty list required"}
                ]},
            )
        metric = body.get("metric", "f1")
        if metric not in ("f1", "f2"):
            raise HTTPException(
                status_code=400,
                detail={"message": "metric must be 'f1' or 'f2'", "violations": [
                    {"path": "$.metric", "message": "must be f1 or f2"}
                ]},
            )
        try:
            req = parse_requirements(_require(body, "requirements"))
            weights = parse_preferences(_require(body, "preferences"))
            composites = []
            for entry in scenarios_raw:
                composite = parse_scenario(entry)
                composites.append((composite.name, composite))
            table = engine.compare(composites, req, weights, metric=metric)
            quadrants = engine.quadrants_for(table, metric)
        except (DocumentError, EvaluationError) as exc:
            raise _http_error(exc)
        payload = {
            "ranking": ranking_to_dict(table),
            "quadrant": quadrant_to_dict(quadrants),
            "series": _chart_series(table),
        }
        return _json_response(payload)

    @app.post("/api/v1/predict")
    def predict(body: Dict[str, Any] = Body(...)) -> Response:
        f1_value = _require(body, "f1")
        cost_series = _require(body, "cost_series")
        epsilon = body.get("epsilon", forecast.DEFAULT_EPSILON)
        try:
            costs = sorted((int(year), float(cost)) for year, cost in cost_series.items())
            points = forecast.f2_series(float(f1_value), costs)
            saturation = forecast.saturation_year(points, epsilon=float(epsilon))
        except (AttributeError, TypeError, ValueError) as exc:
            raise HTTPException(
                status_code=400, detail={"message": str(exc), "violations": []}
            )
        return _json_response(forecast_to_dict(float(f1_value), points, saturation, float(epsilon)))

    def _library_path(name: str) -> Path:
        if library is None:
            raise HTTPException(status_code=404, detail={"message": "no scenario library configured"})
        if not _NAME_RE.match(name):
            raise HTTPException(status_code=400, detail={"message": "invalid scenario name"})
        return library / f"{name}.json"

    @app.get("/api/v1/scenarios")
    def list_scenarios() -> Dict[str, Any]:
        if library is None:
            return {"scenarios": []}
        return {"scenarios": sorted(p.stem for p in library.glob("*.json"))}

    @app.get("/api/v1/scenarios/{name}")
    def get_scenario(name: str) -> Response:
        path = _library_path(name)
        if not path.exists():
            raise HTTPException(status_code=404, detail={"message": f"no scenario {name!r}"})
        return Response(content=path.read_bytes(), media_type="application/json")

    @app.put("/api/v1/scenarios/{name}")
    def put_scenario(name: str, body: Dict[str, Any] = Body(...)) -> Dict[str, Any]:
        path = _library_path(name)
        try:
            parse_scenario(body)
        except DocumentError as exc:
            raise _http_error(exc)
        with locks_guard:
            lock = write_locks.setdefault(name, threading.Lock())
        with lock:
            path.parent.mkdir(parents=True, exist_ok=True)
            path.write_bytes(to_json_bytes(body))
        return {"stored": name}

    return app


def _chart_series(table) -> Dict[str, Any]:
    """Per-parameter value series across technologies, for bar charts."""
    names = [row.name for row in table.rows]
    return {
        "names": names,
        "bw_rx_avg": [row.vector.bw_rx_avg for row in table.rows],
        "bw_tx_avg": [row.vector.bw_tx_avg for row in table.rows],
        "availability": [row.vector.availability for row in table.rows],
        "cost_first_year": [row.vector.cost_first_year for row in table.rows],
        "f1_percent": [row.f1 * 100.0 for row in table.rows],
        "f2_pct_per_keur": [row.f2 * 100000.0 for row in table.rows],
        "r": [row.r for row in table.rows],
    }


def main(argv: Optional[list] = None) -> int:  # pragma: no cover - thin launcher
    import uvicorn

    parser = argparse.ArgumentParser(prog="utem-api")
    parser.add_argument("--port", type=int, default=8000)
    parser.add_argument("--host", default="127.0.0.1")
    parser.add_argument("--library-dir", default=None)
    args = parser.parse_args(argv)
    uvicorn.run(create_app(args.library_dir), host=args.host, port=args.port)
    return 0


if __name__ == "__main__":  # pragma: no cover
    raise SystemExit(main())
