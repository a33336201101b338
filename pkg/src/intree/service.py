"""Local HTTP service hosting one interactive clustering session.

The dataset and pipeline configuration are fixed at launch. The compute
stages run in a background thread; endpoints answer 503 until ready.
Cuts are applied by replaying the full cut history onto the fresh tree,
so undo never needs state snapshots.
"""

from __future__ import annotations

import threading
import time
from dataclasses import dataclass, field

from fastapi import FastAPI, HTTPException
from fastapi.responses import JSONResponse
from pydantic import BaseModel

from . import descent
from .dataset import Dataset
from .pipeline import PipelineConfig, PipelineResult, PipelineStageError, run_stages


class CutRectangle(BaseModel):
    rho_min: float
    rho_max: float
    delta_min: float
    delta_max: float


class CutNodes(BaseModel):
    nodes: list[int]


@dataclass
class Session:
    dataset: Dataset
    config: PipelineConfig
    result: PipelineResult | None = None
    history: list[dict] = field(default_factory=list)
    stages_done: list[dict] = field(default_factory=list)
    error: str | None = None
    elapsed: float = 0.0
    lock: threading.Lock = field(default_factory=threading.Lock)

    @property
    def ready(self) -> bool:
        return self.result is not None

    def compute(self):
        t0 = time.monotonic()
        try:
            self.result = run_stages(self.config, self.dataset)
            self.stages_done = [
                {"stage": s, "done": True} for s in range(1, 7)
            ]
        except PipelineStageError as exc:
            self.stages_done = [
                {"stage": s, "done": s < exc.stage} for s in range(1, 7)
            ]
            self.error = str(exc)
        finally:
            self.elapsed = time.monotonic() - t0

    def current(self):
        """Tree and assignment after replaying the whole cut history."""
        tree = self.result.tree_fresh
        for entry in self.history:
            victims = self._victims_for(tree, entry)
            tree = descent.cut_edges(tree, victims)
        return tree, descent.find_roots(tree)

    def _victims_for(self, tree, entry) -> set[int]:
        if entry["type"] == "rect":
            dg = descent.decision_graph(tree)
            return descent.rect_select(
                dg,
                entry["rho_min"],
                entry["delta_min"],
                entry["rho_max"],
                entry["delta_max"],
            )
        return set(entry["nodes"])


def create_app(dataset: Dataset, config: PipelineConfig, ui_dir=None) -> FastAPI:
    app = FastAPI(title="in-tree clustering session")
    session = Session(dataset=dataset, config=config)
    app.state.session = session
    threading.Thread(target=session.compute, daemon=True).start()

    if ui_dir is not None:
        from fastapi.staticfiles import StaticFiles

        app.mount("/ui", StaticFiles(directory=ui_dir, html=True), name="ui")

    def require_ready() -> Session:
        if session.error:
            raise HTTPException(status_code=500, detail=session.error)
        if not session.ready:
            raise HTTPException(status_code=503, detail="pipeline still running")
        return session

    def assignment_response():
        tree, assignment = session.current()
        body = assignment.to_json_dict()
        body["n_components"] = int(tree.n_components)
        body["history_depth"] = len(session.history)
        return body

    @app.exception_handler(PipelineStageError)
    async def stage_error(_, exc: PipelineStageError):
        return JSONResponse(status_code=500, content={"detail": str(exc), "stage": exc.stage})

    @app.get("/status")
    def status():
        return {
            "ready": session.ready,
            "error": session.error,
            "stages": session.stages_done,
            "elapsed_seconds": session.elapsed,
            "history_depth": len(session.history),
        }

    @app.get("/dataset")
    def get_dataset():
        require_ready()
        return {
            "name": dataset.name,
            "points": dataset.points.tolist(),
            "labels": dataset.labels.tolist() if dataset.labels is not None else None,
        }

    @app.get("/graph")
    def get_graph():
        return require_ready().result.graph.to_json_dict()

    @app.get("/decision-graph")
    def get_decision_graph():
        s = require_ready()
        tree, _ = s.current()
        return [
            {"node": p.node, "rho": p.rho, "delta": p.delta, "is_root": p.is_root}
            for p in descent.decision_graph(tree)
        ]

    @app.get("/clusters")
    def get_clusters():
        require_ready()
        return assignment_response()

    @app.post("/cut")
    def post_cut(rect: CutRectangle):
        s = require_ready()
        if rect.rho_min > rect.rho_max or rect.delta_min > rect.delta_max:
            raise HTTPException(status_code=400, detail="rectangle bounds are inverted")
        with s.lock:
            s.history.append({"type": "rect", **rect.model_dump()})
            return assignment_response()

    @app.post("/cut-nodes")
    def post_cut_nodes(body: CutNodes):
        s = require_ready()
        bad = [v for v in body.nodes if not 0 <= v < dataset.n]
        if bad:
            raise HTTPException(status_code=400, detail=f"nodes out of range: {bad}")
        with s.lock:
            s.history.append({"type": "nodes", "nodes": list(body.nodes)})
            return assignment_response()

    @app.post("/undo")
    def post_undo():
        s = require_ready()
        with s.lock:
            if s.history:
                s.history.pop()
            return assignment_response()

    @app.post("/reset")
    def post_reset():
        s = require_ready()
        with s.lock:
            s.history.clear()
            return assignment_response()

    return app


def serve(
    dataset: Dataset,
    config: PipelineConfig,
    port: int,
    host: str = "127.0.0.1",
    ui_dir=None,
):
    import uvicorn

    if ui_dir is None:
        from pathlib import Path

        candidate = Path("frontend/dist")
        ui_dir = candidate if (candidate / "index.html").exists() else None
    app = create_app(dataset, config, ui_dir=ui_dir)
    uvicorn.run(app, host=host, port=port, log_level="warning")
