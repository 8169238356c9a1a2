"""Driving the game service over real HTTP.

Starts the service on a local port, creates the four-bar endgame with
the human on the Right side, lets the engine open, answers with a
deliberately bad human move, and watches the engine close the game out.
"""

import json
import threading
import time
import urllib.request

import uvicorn

from chocgame.service import create_app

PORT = 8731
BASE = f"http://127.0.0.1:{PORT}"


def request(method, path, payload=None):
    data = None if payload is None else json.dumps(payload).encode()
    req = urllib.request.Request(
        BASE + path, data=data, method=method,
        headers={"Content-Type": "application/json"},
    )
    with urllib.request.urlopen(req) as response:
        return json.loads(response.read())


config = uvicorn.Config(
    create_app("demo-journal.jsonl"), host="127.0.0.1", port=PORT, log_level="error"
)
server = uvicorn.Server(config)
thread = threading.Thread(target=server.run, daemon=True)
thread.start()
while not server.started:
    time.sleep(0.05)

game = request("POST", "/games", {
    "bars": "-(2,4) -(1,3) +(2,3) +(2,0)",
    "human_side": "R",
    "first_mover": "L",
})
url = f"/games/{game['id']}"
print(f"created game {game['id']}: total {game['eval']['total']}, engine plays Left")

state = request("POST", url + "/engine-move")
move = state["move"]
print(f"engine opens: component {move['component']}, {move['axis']}, keep {move['keep']}"
      f"  ->  total {state['eval']['total']}")

while not state["terminal"]:
    if state["to_move"] == "R":
        moves = request("GET", url + "/moves?player=R")["moves"]
        pick = max(moves, key=lambda m: m["eats"])  # greedy human, no strategy
        state = request("POST", url + "/move", pick | {"component": pick["component"]})
        print(f"human eats {pick['eats']} squares with component {pick['component']} "
              f"{pick['axis']} keep {pick['keep']}  ->  total {state['eval']['total']}")
    else:
        state = request("POST", url + "/engine-move")
        move = state["move"]
        print(f"engine replies: component {move['component']}, {move['axis']}, "
              f"keep {move['keep']}  ->  total {state['eval']['total']}")

print(f"game over: winner {state['winner']}")
server.should_exit = True
thread.join(timeout=5)
