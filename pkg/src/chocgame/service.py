"""HTTP/JSON game service: create sums, query moves, play against the engine.

Sessions live in memory, backed by an append-only JSON-lines journal so a
restarted process replays its way back to exactly the same states.  All
evaluations in responses are exact dyadic strings; the *_decimal fields
are an explicitly approximate convenience for display.

Endpoints:
    POST /games                      create from bars or rooks
    GET  /games/{id}                 full session view
    GET  /games/{id}/moves?player=   legal moves with resulting evaluations
    POST /games/{id}/move            human move
    POST /games/{id}/engine-move     engine replies with its selected move
    GET  /games/{id}/eval            evaluation only
"""

from __future__ import annotations

import json
import threading
import time
import uuid
from dataclasses import dataclass, field
from pathlib import Path
from typing import Optional

from fastapi import FastAPI, HTTPException
from pydantic import BaseModel

from chocgame.chocolate import (
    Axis,
    Bar,
    Cut,
    NotationError,
    cell_color,
    explain_illegal_cut,
    format_bar,
    legal_moves,
    value,
)
from chocgame.engine import Player
from chocgame.solver import (
    SumGame,
    SumMove,
    best_move,
    evaluate_moves,
    parse_rooks,
    parse_sum,
    play,
    rooks_to_sum,
    sum_outcome,
    sum_value,
)


class CreateGameRequest(BaseModel):
    bars: Optional[str] = None
    rooks: Optional[str] = None
    human_side: str = "R"
    first_mover: str = "L"


class MoveRequest(BaseModel):
    component: int
    axis: str
    keep: int


def _player(code: str) -> Player:
    if code.upper() == "L":
        return Player.LEFT
    if code.upper() == "R":
        return Player.RIGHT
    raise ValueError(f"player must be L or R, got {code!r}")


def _axis(code: str) -> Axis:
    for axis in Axis:
        if code.lower() in (axis.value, axis.value[0]):
            return axis
    raise ValueError(f"axis must be vertical or horizontal, got {code!r}")


@dataclass
class GameSession:
    id: str
    initial: SumGame
    human: Player
    state: SumGame = field(init=False)
    history: list[tuple[Player, SumMove]] = field(default_factory=list)
    created: float = 0.0
    updated: float = 0.0
    lock: threading.Lock = field(default_factory=threading.Lock, repr=False)

    def __post_init__(self):
        self.state = self.initial

    @property
    def engine(self) -> Player:
        return self.human.opponent

    def is_terminal(self) -> bool:
        mover = self.state.to_move
        return mover is not None and not any(
            legal_moves(bar, mover) for bar in self.state.bars
        )

    def winner(self) -> Optional[Player]:
        if not self.is_terminal():
            return None
        assert self.state.to_move is not None
        return self.state.to_move.opponent


def _component_view(index: int, bar: Bar) -> dict:
    v = value(bar)
    grid = [
        [cell_color(bar, i, j).value for i in range(bar.columns)]
        for j in range(bar.rows)
    ]
    return {
        "index": index,
        "notation": format_bar(bar),
        "n": bar.n,
        "m": bar.m,
        "sign": bar.sign,
        "columns": bar.columns,
        "rows": bar.rows,
        "value": str(v),
        "value_decimal": v.to_float(),
        "grid": grid,  # grid[j][i], row 0 at the bottom
    }


def _eval_view(game: SumGame) -> dict:
    total = sum_value(game)
    return {
        "total": str(total),
        "total_decimal": total.to_float(),
        "outcome": sum_outcome(game).value,
        "components": [
            {"index": i, "notation": format_bar(bar), "value": str(value(bar)),
             "value_decimal": value(bar).to_float()}
            for i, bar in enumerate(game.bars)
        ],
    }


def _session_view(session: GameSession) -> dict:
    state = session.state
    return {
        "id": session.id,
        "components": [_component_view(i, bar) for i, bar in enumerate(state.bars)],
        "eval": _eval_view(state),
        "to_move": state.to_move.value if state.to_move else None,
        "human_side": session.human.value,
        "engine_side": session.engine.value,
        "terminal": session.is_terminal(),
        "winner": session.winner().value if session.winner() else None,
        "history": [
            {"mover": mover.value, "component": move.component,
             "axis": move.cut.axis.value, "keep": move.cut.keep}
            for mover, move in session.history
        ],
        "created": session.created,
        "updated": session.updated,
    }


def _moves_view(game: SumGame, player: Player) -> dict:
    return {
        "player": player.value,
        "moves": [
            {
                "component": ev.move.component,
                "axis": ev.move.cut.axis.value,
                "keep": ev.move.cut.keep,
                "resulting_value": str(ev.resulting),
                "resulting_decimal": ev.resulting.to_float(),
                "eats": ev.eats,
            }
            for ev in evaluate_moves(game, player)
        ],
    }


class Journal:
    """Append-only JSON-lines event log; replaying it rebuilds all state."""

    def __init__(self, path: Path):
        self.path = path
        self._lock = threading.Lock()

    def append(self, event: dict) -> None:
        line = json.dumps(event, sort_keys=True)
        with self._lock:
            with self.path.open("a", encoding="utf-8") as handle:
                handle.write(line + "\n")

    def events(self) -> list[dict]:
        if not self.path.exists():
            return []
        with self.path.open(encoding="utf-8") as handle:
            return [json.loads(line) for line in handle if line.strip()]


class GameServer:
    def __init__(self, journal_path: Path):
        self.journal = Journal(journal_path)
        self.sessions: dict[str, GameSession] = {}
        self._replay()

    # ----- journal replay -----

    def _replay(self) -> None:
        for event in self.journal.events():
            if event["event"] == "create":
                session = self._make_session(
                    event["id"],
                    parse_sum(event["bars"]),
                    _player(event["human_side"]),
                    _player(event["first_mover"]),
                    event["created"],
                )
                self.sessions[session.id] = session
            elif event["event"] == "move":
                session = self.sessions[event["id"]]
                move = SumMove(event["component"], Cut(_axis(event["axis"]), event["keep"]))
                self._apply_move(session, move, record=False, at=event["at"])

    @staticmethod
    def _make_session(session_id: str, game: SumGame, human: Player,
                      first: Player, created: float) -> GameSession:
        session = GameSession(
            id=session_id,
            initial=SumGame(game.bars, first),
            human=human,
            created=created,
        )
        session.updated = created
        return session

    # ----- operations -----

    def create_game(self, request: CreateGameRequest) -> GameSession:
        if (request.bars is None) == (request.rooks is None):
            raise ValueError("provide exactly one of 'bars' or 'rooks'")
        if request.bars is not None:
            game = parse_sum(request.bars)
        else:
            game = rooks_to_sum(parse_rooks(request.rooks))
        human = _player(request.human_side)
        first = _player(request.first_mover)
        session = self._make_session(uuid.uuid4().hex, game, human, first, time.time())
        self.sessions[session.id] = session
        self.journal.append({
            "event": "create",
            "id": session.id,
            "bars": str(session.initial),
            "human_side": human.value,
            "first_mover": first.value,
            "created": session.created,
        })
        return session

    def get(self, session_id: str) -> GameSession:
        session = self.sessions.get(session_id)
        if session is None:
            raise KeyError(session_id)
        return session

    def _apply_move(self, session: GameSession, move: SumMove,
                    record: bool = True, at: Optional[float] = None) -> None:
        mover = session.state.to_move
        assert mover is not None
        session.state = play(session.state, move)
        session.history.append((mover, move))
        session.updated = at if at is not None else time.time()
        if record:
            self.journal.append({
                "event": "move",
                "id": session.id,
                "mover": mover.value,
                "component": move.component,
                "axis": move.cut.axis.value,
                "keep": move.cut.keep,
                "at": session.updated,
            })

    def human_move(self, session: GameSession, move: SumMove) -> None:
        with session.lock:
            if session.is_terminal() or session.state.to_move is not session.human:
                raise WrongTurn(f"it is not {session.human.name}'s turn")
            bar = session.state.bars[move.component] if 0 <= move.component < len(session.state.bars) else None
            if bar is None:
                raise IllegalMove(f"no component {move.component}")
            if move.cut not in legal_moves(bar, session.human):
                raise IllegalMove(explain_illegal_cut(bar, move.cut, session.human))
            self._apply_move(session, move)

    def engine_move(self, session: GameSession) -> SumMove:
        with session.lock:
            if session.is_terminal() or session.state.to_move is not session.engine:
                raise WrongTurn(f"it is not {session.engine.name}'s turn")
            move = best_move(session.state, session.engine)
            assert move is not None  # not terminal, so a move exists
            self._recheck(session.state, session.engine, move)
            self._apply_move(session, move)
            return move

    @staticmethod
    def _recheck(game: SumGame, mover: Player, move: SumMove) -> None:
        # one-ply re-enumeration: the chosen move must match the optimum
        evals = evaluate_moves(game, mover)
        chosen = next(ev.resulting for ev in evals if ev.move == move)
        results = [ev.resulting for ev in evals]
        optimum = max(results) if mover is Player.LEFT else min(results)
        if chosen != optimum:
            raise RuntimeError(
                f"engine self-check failed: chose {chosen}, optimum {optimum}"
            )


class WrongTurn(Exception):
    pass


class IllegalMove(Exception):
    pass


def create_app(journal_path: str | Path = "chocgame-journal.jsonl",
               ui_dir: Optional[str] = None) -> FastAPI:
    server = GameServer(Path(journal_path))
    app = FastAPI(title="chocgame service")
    app.state.server = server

    @app.post("/games")
    def create_game(request: CreateGameRequest):
        try:
            session = server.create_game(request)
        except (NotationError, ValueError) as exc:
            raise HTTPException(status_code=400, detail=str(exc))
        return _session_view(session)

    @app.get("/games/{session_id}")
    def get_game(session_id: str):
        return _session_view(_get(session_id))

    @app.get("/games/{session_id}/moves")
    def get_moves(session_id: str, player: Optional[str] = None):
        session = _get(session_id)
        if player is None:
            mover = session.state.to_move
            if mover is None:
                raise HTTPException(status_code=400, detail="no side to move; pass ?player=")
        else:
            try:
                mover = _player(player)
            except ValueError as exc:
                raise HTTPException(status_code=400, detail=str(exc))
        return _moves_view(session.state, mover)

    @app.post("/games/{session_id}/move")
    def post_move(session_id: str, request: MoveRequest):
        session = _get(session_id)
        try:
            move = SumMove(request.component, Cut(_axis(request.axis), request.keep))
            server.human_move(session, move)
        except WrongTurn as exc:
            raise HTTPException(status_code=409, detail=str(exc))
        except (IllegalMove, ValueError) as exc:
            raise HTTPException(status_code=422, detail=str(exc))
        return _session_view(session)

    @app.post("/games/{session_id}/engine-move")
    def post_engine_move(session_id: str):
        session = _get(session_id)
        try:
            move = server.engine_move(session)
        except WrongTurn as exc:
            raise HTTPException(status_code=409, detail=str(exc))
        view = _session_view(session)
        view["move"] = {
            "component": move.component,
            "axis": move.cut.axis.value,
            "keep": move.cut.keep,
        }
        return view

    @app.get("/games/{session_id}/eval")
    def get_eval(session_id: str):
        return _eval_view(_get(session_id).state)

    def _get(session_id: str) -> GameSession:
        try:
            return server.get(session_id)
        except KeyError:
            raise HTTPException(status_code=404, detail=f"unknown game {session_id}")

    if ui_dir:
        from fastapi.staticfiles import StaticFiles

        app.mount("/", StaticFiles(directory=ui_dir, html=True), name="ui")

    return app
