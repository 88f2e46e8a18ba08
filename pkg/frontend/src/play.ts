import {
  createGame,
  getDominated,
  postMove,
} from './api';
import { BoardView } from './board';
import type { GamePayload } from './types';

function el<K extends keyof HTMLElementTagNameMap>(
  tag: K,
  cls?: string,
  text?: string,
): HTMLElementTagNameMap[K] {
  const node = document.createElement(tag);
  if (cls) node.className = cls;
  if (text !== undefined) node.textContent = text;
  return node;
}

// For each illegal empty cell, the two placed points whose line blocks
// it. Built exclusively from /api/dominated responses per placed pair,
// so the collinearity logic stays on the server.
async function buildBlockingPairs(
  game: GamePayload,
): Promise<Map<string, [[number, number], [number, number]]>> {
  const out = new Map<string, [[number, number], [number, number]]>();
  const placed = game.state.placed;
  const legal = new Set(game.legalMoves.map(([x, y]) => `${x},${y}`));
  const occupied = new Set(placed.map(([x, y]) => `${x},${y}`));
  const open: string[] = [];
  for (let y = 1; y <= game.state.n; y++) {
    for (let x = 1; x <= game.state.n; x++) {
      const key = `${x},${y}`;
      if (!legal.has(key) && !occupied.has(key)) open.push(key);
    }
  }
  if (open.length === 0) return out;
  for (let i = 0; i < placed.length; i++) {
    for (let j = i + 1; j < placed.length; j++) {
      const mask = await getDominated(game.state.n, [placed[i], placed[j]]);
      for (const [x, y] of mask.dominated) {
        const key = `${x},${y}`;
        if (!out.has(key) && !legal.has(key) && !occupied.has(key)) {
          out.set(key, [placed[i], placed[j]]);
        }
      }
    }
  }
  return out;
}

export class PlayView {
  readonly root: HTMLElement;
  private board: BoardView | null = null;
  private game: GamePayload | null = null;
  private blocking = new Map<string, [[number, number], [number, number]]>();
  private status: HTMLElement;
  private banner: HTMLElement;
  private toast: HTMLElement;
  private boardBox: HTMLElement;
  private busy = false;
  // tests await this to know the view settled after a click
  settled: Promise<void> = Promise.resolve();

  constructor(root: HTMLElement) {
    this.root = root;
    const controls = el('div', 'controls');
    const nInput = el('input') as HTMLInputElement;
    nInput.type = 'number';
    nInput.min = '1';
    nInput.max = '10';
    nInput.value = '4';
    nInput.id = 'play-n';
    const engineSelect = el('select') as HTMLSelectElement;
    engineSelect.id = 'play-engine';
    for (const side of ['second', 'first', 'none']) {
      const opt = el('option', undefined, side) as HTMLOptionElement;
      opt.value = side;
      engineSelect.appendChild(opt);
    }
    const startBtn = el('button', 'start', 'new game');
    startBtn.id = 'play-start';
    startBtn.addEventListener('click', () => {
      this.settled = this.start(
        Number(nInput.value),
        engineSelect.value as 'first' | 'second' | 'none',
      );
    });
    controls.append('board ', nInput, ' engine plays ', engineSelect, ' ', startBtn);

    this.status = el('p', 'status', 'no game yet');
    this.banner = el('p', 'banner');
    this.banner.hidden = true;
    this.toast = el('p', 'toast');
    this.toast.hidden = true;
    this.boardBox = el('div', 'board-box');
    root.replaceChildren(controls, this.status, this.banner, this.toast, this.boardBox);
  }

  async start(n: number, engine: 'first' | 'second' | 'none'): Promise<void> {
    try {
      const game = await createGame(n, engine);
      this.game = game;
      this.board = new BoardView(this.boardBox, n, {
        onClick: (x, y) => {
          this.settled = this.click(x, y);
        },
        onHover: (x, y) => this.hover(x, y),
      });
      await this.apply(game);
    } catch (err) {
      this.showToast(`could not start game: ${err}`);
    }
  }

  private async click(x: number, y: number): Promise<void> {
    if (!this.game || !this.board || this.busy || this.game.over) return;
    const key = `${x},${y}`;
    const legal = this.game.legalMoves.some(([a, b]) => a === x && b === y);
    if (!legal) return; // cell is inert; server already ruled it out
    this.busy = true;
    try {
      const result = await postMove(this.game.id, x, y);
      if (result.ok) {
        await this.apply(result.game);
      } else {
        // server disagreed after all: surface it and re-sync
        this.showToast(`rejected: ${result.rejection.reason}`);
      }
    } catch (err) {
      this.showToast(`move failed: ${err}`);
    } finally {
      this.busy = false;
    }
  }

  private async apply(game: GamePayload): Promise<void> {
    this.game = game;
    if (!this.board) return;
    this.board.setPlaced(game.state.placed, game.engineMove);
    this.board.setClass(game.legalMoves, 'legal');
    this.blocking = await buildBlockingPairs(game);
    const placedCount = game.state.placed.length;
    if (game.over) {
      const name = game.winner === 'first' ? 'First' : 'Second';
      this.banner.textContent = `${name} player wins`;
      this.banner.hidden = false;
      this.status.textContent = `game over after ${placedCount} placements`;
    } else {
      this.banner.hidden = true;
      const side = game.state.toMove === 'first' ? 'First' : 'Second';
      let verdict = '';
      if (game.verdictIfKnown) {
        const w = game.verdictIfKnown.winner === 'first' ? 'First' : 'Second';
        verdict = ` (${w} wins with best play)`;
      }
      this.status.textContent = `${side} to move, ${placedCount} placed${verdict}`;
    }
  }

  private hover(x: number, y: number | null): void {
    if (!this.board) return;
    if (y === null) {
      this.board.setClass([], 'blocking');
      return;
    }
    const pair = this.blocking.get(`${x},${y}`);
    this.board.setClass(pair ? [pair[0], pair[1]] : [], 'blocking');
  }

  private showToast(message: string): void {
    this.toast.textContent = message;
    this.toast.hidden = false;
    setTimeout(() => {
      this.toast.hidden = true;
    }, 4000);
  }

  blockingPairFor(x: number, y: number): [[number, number], [number, number]] | undefined {
    return this.blocking.get(`${x},${y}`);
  }

  currentGame(): GamePayload | null {
    return this.game;
  }

  boardView(): BoardView | null {
    return this.board;
  }
}
