"""HTTP service over the disk models: sessions holding a current
triangulation, mutation, the edge bijection, Ext queries, and quiver windows.

Sessions are in-memory; requests to one session serialize on its lock while
different sessions proceed in parallel.
"""

from __future__ import annotations

import json
import re
import threading
import uuid
from http.server import BaseHTTPRequestHandler, ThreadingHTTPServer
from urllib.parse import parse_qs, urlparse

from . import arcs, category, quivers, triangulation
from .arcs import TaggedEdge
from .disk import DiskModel, DomainError, MarkedPoint


class Session:
    def __init__(self, model: DiskModel, current: triangulation.Triangulation):
        self.id = uuid.uuid4().hex[:16]
        self.model = model
        self.current = current
        self.history: list[tuple[TaggedEdge, TaggedEdge]] = []
        self.lock = threading.Lock()

    def to_json(self):
        return {
            "id": self.id,
            "model": self.model.to_json(),
            "triangulation": self.current.to_json(),
            "history": [
                {"edge": e.to_json(), "replacement": r.to_json()}
                for e, r in self.history
            ],
        }


class ServiceState:
    def __init__(self, model: DiskModel):
        self.default_model = model
        self.sessions: dict[str, Session] = {}
        self.lock = threading.Lock()

    def create(self, model: DiskModel) -> Session:
        apex = MarkedPoint(1, 0)
        sess = Session(model, triangulation.fan(model, apex))
        with self.lock:
            self.sessions[sess.id] = sess
        return sess

    def get(self, sid: str) -> Session | None:
        with self.lock:
            return self.sessions.get(sid)

    def restore(self, payload) -> None:
        for item in payload.get("sessions", []):
            model = DiskModel.from_json(item["model"])
            sess = Session(model, triangulation.Triangulation.from_json(item["triangulation"]))
            sess.id = item["id"]
            sess.history = [
                (TaggedEdge.from_json(h["edge"]), TaggedEdge.from_json(h["replacement"]))
                for h in item.get("history", [])
            ]
            with self.lock:
                self.sessions[sess.id] = sess

    def snapshot(self):
        with self.lock:
            return {"sessions": [s.to_json() for s in self.sessions.values()]}


class ApiError(Exception):
    def __init__(self, status: int, code: str, message: str):
        super().__init__(message)
        self.status = status
        self.code = code
        self.message = message


def _model_from_query(qs) -> DiskModel:
    n = int(qs.get("n", ["1"])[0])
    completed = qs.get("completed", ["false"])[0].lower() in ("1", "true", "yes")
    return DiskModel(n, completed)


class Handler(BaseHTTPRequestHandler):
    state: ServiceState  # set on the server class

    def log_message(self, fmt, *args):
        pass

    def _send(self, status: int, payload) -> None:
        body = json.dumps(payload).encode()
        self.send_response(status)
        self.send_header("Content-Type", "application/json")
        self.send_header("Content-Length", str(len(body)))
        self.send_header("Access-Control-Allow-Origin", "*")
        self.send_header("Access-Control-Allow-Headers", "Content-Type")
        self.send_header("Access-Control-Allow-Methods", "GET, POST, OPTIONS")
        self.end_headers()
        self.wfile.write(body)

    def _body(self):
        length = int(self.headers.get("Content-Length") or 0)
        if length == 0:
            return {}
        try:
            return json.loads(self.rfile.read(length).decode())
        except json.JSONDecodeError as err:
            raise ApiError(400, "BadJson", str(err))

    def do_OPTIONS(self):
        self._send(204, {})

    def do_GET(self):
        self._route("GET")

    def do_POST(self):
        self._route("POST")

    def _route(self, method: str) -> None:
        url = urlparse(self.path)
        qs = parse_qs(url.query)
        try:
            payload = self._dispatch(method, url.path, qs)
            self._send(200, payload)
        except ApiError as err:
            self._send(err.status, {"code": err.code, "message": err.message})
        except DomainError as err:
            self._send(400, {"code": getattr(err, "code", "DomainError"), "message": str(err)})
        except (KeyError, ValueError, TypeError) as err:
            self._send(400, {"code": "BadRequest", "message": str(err)})

    def _session(self, sid: str) -> Session:
        sess = self.state.get(sid)
        if sess is None:
            raise ApiError(404, "UnknownSession", f"no session {sid}")
        return sess

    def _dispatch(self, method: str, path: str, qs):
        state = self.state
        if method == "GET" and path == "/api/model":
            return state.default_model.to_json()
        if method == "POST" and path == "/api/session":
            body = self._body()
            model = (
                DiskModel.from_json(body["model"])
                if "model" in body
                else state.default_model
            )
            sess = state.create(model)
            return {"id": sess.id, "triangulation": sess.current.to_json()}
        m = re.fullmatch(r"/api/session/([0-9a-f]+)", path)
        if method == "GET" and m:
            return self._session(m.group(1)).to_json()
        m = re.fullmatch(r"/api/session/([0-9a-f]+)/window", path)
        if method == "GET" and m:
            sess = self._session(m.group(1))
            bound = int(qs.get("bound", ["4"])[0])
            with sess.lock:
                members = sess.current.members_in_window(bound)
                labels = {}
                for e in sorted(members, key=repr):
                    x = category.phi_inverse(sess.model, e)
                    labels[repr(e)] = repr(x) if x is not None else None
                return {
                    "bound": bound,
                    "members": [e.to_json() for e in sorted(members, key=repr)],
                    "labels": labels,
                    "mutable": {
                        repr(e): triangulation.is_mutable(sess.current, e)
                        for e in sorted(members, key=repr)
                    },
                }
        m = re.fullmatch(r"/api/session/([0-9a-f]+)/mutate", path)
        if method == "POST" and m:
            sess = self._session(m.group(1))
            body = self._body()
            edge = TaggedEdge.from_json(body["edge"])
            with sess.lock:
                try:
                    new, star = triangulation.mutate(sess.current, edge)
                except triangulation.NonMutable as err:
                    raise ApiError(409, "NonMutable", str(err))
                except triangulation.NotMember as err:
                    raise ApiError(409, "NotMember", str(err))
                sess.current = new
                sess.history.append((edge, star))
                return {
                    "replacement": star.to_json(),
                    "triangulation": new.to_json(),
                }
        m = re.fullmatch(r"/api/session/([0-9a-f]+)/undo", path)
        if method == "POST" and m:
            sess = self._session(m.group(1))
            with sess.lock:
                if not sess.history:
                    raise ApiError(409, "NothingToUndo", "history is empty")
                edge, star = sess.history.pop()
                sess.current, back = triangulation.mutate(sess.current, star)
                if back != edge:
                    raise ApiError(500, "ReplayMismatch", f"{back} != {edge}")
                return {"restored": edge.to_json(), "triangulation": sess.current.to_json()}
        if method == "GET" and path == "/api/phi":
            model = _model_from_query(qs)
            obj = category.Indecomposable.from_json(json.loads(qs["object"][0]))
            return {"edge": category.phi(model, obj).to_json()}
        if method == "GET" and path == "/api/phi-inv":
            model = _model_from_query(qs)
            edge = TaggedEdge.from_json(json.loads(qs["edge"][0]))
            x = category.phi_inverse(model, edge)
            return {"object": None if x is None else x.to_json()}
        if method == "POST" and path == "/api/ext":
            body = self._body()
            model = DiskModel.from_json(body["model"])
            x = category.Indecomposable.from_json(body["x"])
            y = category.Indecomposable.from_json(body["y"])
            dim = category.ext_sum_dim(model, x, y)
            return {
                "sum_dim": dim,
                "positive": dim > 0,
                "exceeds_one": dim > 1,
                "compatible": category.compatible(model, x, y),
            }
        if method == "GET" and path == "/api/quiver-window":
            model = _model_from_query(qs)
            bound = int(qs.get("bound", ["3"])[0])
            return quivers.build_edge_quiver_window(model, bound).to_json()
        raise ApiError(404, "NotFound", f"no route {method} {path}")


def make_server(model: DiskModel, port: int, state: ServiceState | None = None):
    state = state or ServiceState(model)

    class BoundHandler(Handler):
        pass

    BoundHandler.state = state
    server = ThreadingHTTPServer(("127.0.0.1", port), BoundHandler)
    server.state = state
    return server


def serve(model: DiskModel, port: int, load_path=None, dump_path=None) -> None:
    state = ServiceState(model)
    if load_path:
        with open(load_path) as fh:
            state.restore(json.load(fh))
    server = make_server(model, port, state)
    try:
        server.serve_forever()
    except KeyboardInterrupt:
        pass
    finally:
        if dump_path:
            with open(dump_path, "w") as fh:
                json.dump(state.snapshot(), fh, indent=2)
        server.server_close()
