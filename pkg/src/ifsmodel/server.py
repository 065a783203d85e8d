"""Local HTTP transport for the session protocol plus static file serving.

Endpoints:
    POST /api/session   one protocol message in, one reply out (JSON)
    GET  /api/examples  bundled IFS files as [{"name": ..., "text": ...}]
    GET  /<path>        static files from the configured directory
"""

from __future__ import annotations

import json
import threading
from http.server import BaseHTTPRequestHandler, ThreadingHTTPServer
from pathlib import Path
from typing import Optional

from .codec import EXAMPLE_NAMES, example_text
from .protocol import SessionProtocol

_CONTENT_TYPES = {
    ".html": "text/html; charset=utf-8",
    ".js": "text/javascript; charset=utf-8",
    ".mjs": "text/javascript; charset=utf-8",
    ".css": "text/css; charset=utf-8",
    ".json": "application/json",
    ".map": "application/json",
    ".svg": "image/svg+xml",
    ".ifs": "text/plain; charset=utf-8",
    ".png": "image/png",
    ".ico": "image/x-icon",
}


def make_server(host: str, port: int,
                static_dir: Optional[str] = None) -> ThreadingHTTPServer:
    protocol = SessionProtocol()
    lock = threading.Lock()  # protocol is single-writer
    static_root = Path(static_dir).resolve() if static_dir else None

    class Handler(BaseHTTPRequestHandler):
        def _send_json(self, obj: dict, status: int = 200) -> None:
            data = json.dumps(obj).encode("utf-8")
            self.send_response(status)
            self.send_header("Content-Type", "application/json")
            self.send_header("Content-Length", str(len(data)))
            self.send_header("Access-Control-Allow-Origin", "*")
            self.end_headers()
            self.wfile.write(data)

        def do_OPTIONS(self):  # CORS preflight for dev setups
            self.send_response(204)
            self.send_header("Access-Control-Allow-Origin", "*")
            self.send_header("Access-Control-Allow-Methods", "GET, POST, OPTIONS")
            self.send_header("Access-Control-Allow-Headers", "Content-Type")
            self.end_headers()

        def do_POST(self):
            if self.path != "/api/session":
                self._send_json({"ok": False, "error": {
                    "kind": "not_found", "message": self.path}}, 404)
                return
            try:
                length = int(self.headers.get("Content-Length", "0"))
                msg = json.loads(self.rfile.read(length))
            except (ValueError, json.JSONDecodeError):
                self._send_json({"ok": False, "error": {
                    "kind": "bad_message", "message": "invalid JSON body"}}, 400)
                return
            with lock:
                reply = protocol.handle(msg)
            self._send_json(reply)

        def do_GET(self):
            if self.path == "/api/examples":
                self._send_json({"ok": True, "examples": [
                    {"name": n, "text": example_text(n)} for n in EXAMPLE_NAMES]})
                return
            self._serve_static()

        def _serve_static(self):
            if static_root is None:
                self.send_error(404, "no static directory configured")
                return
            rel = self.path.split("?", 1)[0].lstrip("/") or "index.html"
            target = (static_root / rel).resolve()
            if not str(target).startswith(str(static_root)) or not target.is_file():
                self.send_error(404)
                return
            data = target.read_bytes()
            ctype = _CONTENT_TYPES.get(target.suffix.lower(),
                                       "application/octet-stream")
            self.send_response(200)
            self.send_header("Content-Type", ctype)
            self.send_header("Content-Length", str(len(data)))
            self.end_headers()
            self.wfile.write(data)

        def log_message(self, fmt, *args):  # quiet by default
            pass

    return ThreadingHTTPServer((host, port), Handler)


def serve(host: str, port: int, static_dir: Optional[str] = None) -> int:
    httpd = make_server(host, port, static_dir)
    where = f"http://{host}:{httpd.server_address[1]}/"
    print(f"ifsmodel: serving session protocol at {where}api/session")
    if static_dir:
        print(f"ifsmodel: serving static files from {static_dir} at {where}")
    try:
        httpd.serve_forever()
    except KeyboardInterrupt:
        pass
    finally:
        httpd.server_close()
    return 0
