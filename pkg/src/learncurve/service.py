"""Stateless HTTP facade over the scenario engine.

Endpoints (JSON request/response, ``/api/v1`` prefix): ``GET /presets`` and
``POST /project``, ``/target``, ``/lcoh``, ``/sweep``, ``/figure``. Request
bodies name a scenario (``preset`` or an inline ``scenario`` document, plus
an optional ``overrides`` object deep-merged on top) and the operation's
arguments. Every response envelope echoes the fully resolved scenario
document so any result can be reproduced offline or via the CLI. Validation
problems surface as 422 with the loader's field-naming message. See
``docs/api.md`` for the endpoint reference.
"""

from __future__ import annotations

import hashlib
import json
import warnings

from fastapi import Body, FastAPI
from fastapi.responses import JSONResponse

from .figures import FIGURE_IDS, FigureDataset, emit_figure_dataset
from .presets import PresetCatalog, load_catalog
from .scenario_io import ScenarioWarning, parse_scenario, scenario_to_doc
from .tables import (
    lcoh_dataset,
    project_dataset,
    resolve_at,
    resolve_structure,
    sweep_dataset,
    target_dataset,
)
from .types import DomainError, Scenario, ValidationError

API_PREFIX = "/api/v1"


def _request_id(payload: dict) -> str:
    canonical = json.dumps(payload, sort_keys=True, separators=(",", ":"))
    return hashlib.sha256(canonical.encode("utf-8")).hexdigest()[:16]


def _deep_merge(base: dict, overrides: dict) -> dict:
    merged = dict(base)
    for key, value in overrides.items():
        if isinstance(value, dict) and isinstance(merged.get(key), dict):
            merged[key] = _deep_merge(merged[key], value)
        else:
            merged[key] = value
    return merged


def _check_payload_keys(payload: dict, allowed: set[str]) -> None:
    for key in payload:
        if key not in allowed:
            raise ValidationError(f"request: unknown key {key!r}")


_SCENARIO_KEYS = {"preset", "scenario", "overrides", "lax"}


def _resolve_request_scenario(
    payload: dict, catalog: PresetCatalog
) -> tuple[Scenario, dict, list[str]]:
    """Resolve preset/inline scenario plus overrides; returns warnings too."""
    preset = payload.get("preset")
    inline = payload.get("scenario")
    if (preset is None) == (inline is None):
        raise ValidationError("request: give exactly one of 'preset' or 'scenario'")
    strict = not bool(payload.get("lax", False))
    if preset is not None:
        if not isinstance(preset, str):
            raise ValidationError(f"request.preset = {preset!r} must be a string")
        doc = scenario_to_doc(catalog.scenario(preset))
    else:
        if not isinstance(inline, dict):
            raise ValidationError("request.scenario must be a JSON object")
        doc = inline
    overrides = payload.get("overrides")
    if overrides is not None:
        if not isinstance(overrides, dict):
            raise ValidationError("request.overrides must be a JSON object")
        doc = _deep_merge(doc, overrides)
    captured: list[str] = []
    with warnings.catch_warnings(record=True) as caught:
        warnings.simplefilter("always", ScenarioWarning)
        scenario = parse_scenario(doc, strict=strict)
    for warning in caught:
        if issubclass(warning.category, ScenarioWarning):
            captured.append(str(warning.message))
    return scenario, scenario_to_doc(scenario), captured


def _dataset_payload(dataset: FigureDataset) -> dict:
    return {
        "dataset": dataset.dataset_id,
        "columns": list(dataset.columns),
        "metadata": dataset.metadata,
        "rows": [list(row) for row in dataset.rows],
    }


def _envelope(payload: dict, resolved_doc: dict, args: dict, dataset, warning_list) -> dict:
    return {
        "request_id": _request_id(payload),
        "resolved": {"scenario": resolved_doc, "args": args},
        "result": _dataset_payload(dataset),
        "warnings": warning_list,
    }


def _number_or_none(payload: dict, key: str):
    value = payload.get(key)
    if value is None:
        return None
    if isinstance(value, bool) or not isinstance(value, (int, float)):
        raise ValidationError(f"request.{key} = {value!r} is not a number")
    return float(value)


def _int_or_none(payload: dict, key: str):
    value = payload.get(key)
    if value is None:
        return None
    if isinstance(value, bool) or not isinstance(value, int):
        raise ValidationError(f"request.{key} = {value!r} must be an integer")
    return value


def _str_or_none(payload: dict, key: str):
    value = payload.get(key)
    if value is not None and not isinstance(value, str):
        raise ValidationError(f"request.{key} = {value!r} must be a string")
    return value


def create_app(
    catalog: PresetCatalog | None = None,
    cors_origins=(),
    ui_dir: str | None = None,
) -> FastAPI:
    """Build the API application around an immutable preset catalog."""
    catalog = catalog if catalog is not None else load_catalog()
    app = FastAPI(title="learncurve", version="0.1.0", docs_url=None, redoc_url=None)

    if cors_origins:
        from fastapi.middleware.cors import CORSMiddleware

        app.add_middleware(
            CORSMiddleware,
            allow_origins=list(cors_origins),
            allow_methods=["GET", "POST"],
            allow_headers=["*"],
        )

    @app.exception_handler(ValidationError)
    async def _validation_handler(_, exc: ValidationError):
        return JSONResponse(status_code=422, content={"detail": str(exc)})

    @app.exception_handler(DomainError)
    async def _domain_handler(_, exc: DomainError):
        return JSONResponse(status_code=422, content={"detail": str(exc)})

    @app.get(API_PREFIX + "/presets")
    async def presets() -> dict:
        return {
            "presets": [
                {
                    "name": preset.name,
                    "description": preset.description,
                    "provenance": dict(preset.provenance),
                    "scenario": preset.doc(),
                }
                for preset in catalog.presets.values()
            ]
        }

    @app.post(API_PREFIX + "/project")
    async def project(payload: dict = Body(...)) -> dict:
        _check_payload_keys(
            payload,
            _SCENARIO_KEYS | {"structure", "at_total_added_gw", "at", "at_label"},
        )
        scenario, doc, warning_list = _resolve_request_scenario(payload, catalog)
        structure = resolve_structure(_str_or_none(payload, "structure"), scenario, "stack")
        at = resolve_at(
            scenario,
            total_added_gw=_number_or_none(payload, "at_total_added_gw"),
            state_doc=payload.get("at"),
            label=_str_or_none(payload, "at_label"),
        )
        dataset = project_dataset(scenario, structure, at)
        args = {
            "structure": structure.value,
            "at_total_added_gw": payload.get("at_total_added_gw"),
            "at": payload.get("at"),
            "at_label": payload.get("at_label"),
        }
        return _envelope(payload, doc, args, dataset, warning_list)

    @app.post(API_PREFIX + "/target")
    async def target(payload: dict = Body(...)) -> dict:
        _check_payload_keys(
            payload,
            _SCENARIO_KEYS
            | {"variant", "region", "category", "structure", "target_cost_usd_per_kw"},
        )
        scenario, doc, warning_list = _resolve_request_scenario(payload, catalog)
        target_cost = _number_or_none(payload, "target_cost_usd_per_kw")
        if target_cost is None:
            raise ValidationError("request: missing required key 'target_cost_usd_per_kw'")
        dataset = target_dataset(
            scenario,
            target_cost=target_cost,
            variant=_str_or_none(payload, "variant"),
            region=_str_or_none(payload, "region"),
            category=_str_or_none(payload, "category"),
            structure=_str_or_none(payload, "structure"),
        )
        args = {
            "variant": payload.get("variant"),
            "region": payload.get("region"),
            "category": payload.get("category"),
            "structure": payload.get("structure"),
            "target_cost_usd_per_kw": target_cost,
        }
        return _envelope(payload, doc, args, dataset, warning_list)

    @app.post(API_PREFIX + "/lcoh")
    async def lcoh(payload: dict = Body(...)) -> dict:
        _check_payload_keys(
            payload,
            _SCENARIO_KEYS
            | {
                "capex_usd_per_kw",
                "utilization",
                "wacc",
                "lifetime_years",
                "specific_energy_kwh_per_kg",
            },
        )
        scenario, doc, warning_list = _resolve_request_scenario(payload, catalog)
        capex = _number_or_none(payload, "capex_usd_per_kw")
        utilization = _number_or_none(payload, "utilization")
        if capex is None:
            raise ValidationError("request: missing required key 'capex_usd_per_kw'")
        if utilization is None:
            raise ValidationError("request: missing required key 'utilization'")
        dataset = lcoh_dataset(
            scenario,
            capex=capex,
            utilization=utilization,
            wacc=_number_or_none(payload, "wacc"),
            lifetime_years=_int_or_none(payload, "lifetime_years"),
            specific_energy=_number_or_none(payload, "specific_energy_kwh_per_kg"),
        )
        args = {key: payload.get(key) for key in (
            "capex_usd_per_kw", "utilization", "wacc", "lifetime_years",
            "specific_energy_kwh_per_kg",
        )}
        return _envelope(payload, doc, args, dataset, warning_list)

    @app.post(API_PREFIX + "/sweep")
    async def sweep(payload: dict = Body(...)) -> dict:
        _check_payload_keys(
            payload,
            _SCENARIO_KEYS
            | {"variant", "region", "category", "structure", "from_gw", "to_gw", "points"},
        )
        scenario, doc, warning_list = _resolve_request_scenario(payload, catalog)
        to_gw = _number_or_none(payload, "to_gw")
        if to_gw is None:
            raise ValidationError("request: missing required key 'to_gw'")
        points = _int_or_none(payload, "points")
        dataset = sweep_dataset(
            scenario,
            to_gw=to_gw,
            points=25 if points is None else points,
            from_gw=_number_or_none(payload, "from_gw"),
            variant=_str_or_none(payload, "variant"),
            region=_str_or_none(payload, "region"),
            category=_str_or_none(payload, "category"),
            structure=_str_or_none(payload, "structure"),
        )
        args = {key: payload.get(key) for key in (
            "variant", "region", "category", "structure", "from_gw", "to_gw", "points",
        )}
        return _envelope(payload, doc, args, dataset, warning_list)

    @app.post(API_PREFIX + "/figure")
    async def figure(payload: dict = Body(...)) -> dict:
        _check_payload_keys(payload, _SCENARIO_KEYS | {"id"})
        figure_id = _str_or_none(payload, "id")
        if figure_id is None:
            raise ValidationError(
                f"request: missing required key 'id' (one of: {', '.join(FIGURE_IDS)})"
            )
        scenario, doc, warning_list = _resolve_request_scenario(payload, catalog)
        dataset = emit_figure_dataset(figure_id, scenario)
        return _envelope(payload, doc, {"id": figure_id}, dataset, warning_list)

    if ui_dir:
        from fastapi.staticfiles import StaticFiles

        app.mount("/", StaticFiles(directory=ui_dir, html=True), name="ui")

    return app


def serve(
    host: str = "127.0.0.1",
    port: int = 8000,
    catalog: PresetCatalog | None = None,
    cors_origins=(),
    ui_dir: str | None = None,
) -> int:
    """Run the API with uvicorn; returns nonzero on bind failure."""
    import sys

    import uvicorn

    app = create_app(catalog=catalog, cors_origins=cors_origins, ui_dir=ui_dir)
    try:
        uvicorn.run(app, host=host, port=port, log_level="info")
    except OSError as exc:
        print(f"error: cannot bind {host}:{port}: {exc}", file=sys.stderr)
        return 1
    return 0
