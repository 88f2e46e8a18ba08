import { ApiError, getDominated, getSolutions } from './api';
import { BoardView } from './board';
import type { Mode, SolutionPayload, SolutionsPayload } from './types';

const PAGE_SIZE = 12;

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

export class GalleryView {
  readonly root: HTMLElement;
  private payload: SolutionsPayload | null = null;
  private page = 0;
  private selected: SolutionPayload | null = null;
  private overlay = false;
  private counts: HTMLElement;
  private list: HTMLElement;
  private pager: HTMLElement;
  private boardBox: HTMLElement;
  private notice: HTMLElement;
  private detail: HTMLElement;
  settled: Promise<void> = Promise.resolve();

  constructor(root: HTMLElement) {
    this.root = root;
    const controls = el('div', 'controls');
    const nInput = el('input') as HTMLInputElement;
    nInput.type = 'number';
    nInput.min = '2';
    nInput.value = '8';
    nInput.id = 'gallery-n';
    const modeSelect = el('select') as HTMLSelectElement;
    modeSelect.id = 'gallery-mode';
    for (const mode of ['independent', 'general']) {
      const opt = el('option', undefined, mode) as HTMLOptionElement;
      opt.value = mode;
      modeSelect.appendChild(opt);
    }
    const loadBtn = el('button', 'start', 'load');
    loadBtn.id = 'gallery-load';
    loadBtn.addEventListener('click', () => {
      this.settled = this.load(Number(nInput.value), modeSelect.value as Mode);
    });
    const overlayLabel = el('label', 'overlay-toggle');
    const overlayBox = el('input') as HTMLInputElement;
    overlayBox.type = 'checkbox';
    overlayBox.id = 'gallery-overlay';
    overlayBox.addEventListener('change', () => {
      this.overlay = overlayBox.checked;
      this.settled = this.renderSelected();
    });
    overlayLabel.append(overlayBox, ' dominated overlay');
    controls.append('board ', nInput, ' ', modeSelect, ' ', loadBtn, ' ', overlayLabel);

    this.counts = el('p', 'counts');
    this.notice = el('p', 'notice');
    this.notice.hidden = true;
    this.list = el('div', 'solution-list');
    this.pager = el('div', 'pager');
    this.boardBox = el('div', 'board-box');
    this.detail = el('p', 'detail');
    root.replaceChildren(
      controls, this.counts, this.notice, this.list, this.pager,
      this.detail, this.boardBox,
    );
  }

  async load(n: number, mode: Mode): Promise<void> {
    this.notice.hidden = true;
    try {
      this.payload = await getSolutions(n, mode);
    } catch (err) {
      this.payload = null;
      this.counts.textContent = '';
      this.list.replaceChildren();
      this.pager.replaceChildren();
      this.boardBox.replaceChildren();
      if (err instanceof ApiError && err.status === 404) {
        // the server's detail carries the exact CLI invocation to run
        this.notice.textContent = String(err.detail);
        this.notice.hidden = false;
        return;
      }
      throw err;
    }
    this.page = 0;
    const p = this.payload;
    const tag = p.exhausted ? '' : ' (search not exhausted)';
    this.counts.textContent =
      `minimum ${p.minimum}: ${p.distinct} distinct sets, ` +
      `${p.classes} up to symmetry${tag}`;
    this.renderList();
    if (p.witnesses.length > 0) {
      await this.select(p.witnesses[0]);
    }
  }

  private renderList(): void {
    if (!this.payload) return;
    const start = this.page * PAGE_SIZE;
    const visible = this.payload.witnesses.slice(start, start + PAGE_SIZE);
    this.list.replaceChildren();
    visible.forEach((sol, i) => {
      const btn = el('button', 'solution-entry', `#${start + i + 1} size ${sol.size}`);
      btn.addEventListener('click', () => {
        this.settled = this.select(sol);
      });
      this.list.appendChild(btn);
    });
    this.pager.replaceChildren();
    const pages = Math.ceil(this.payload.witnesses.length / PAGE_SIZE);
    if (pages > 1) {
      const prev = el('button', 'pager-btn', 'prev');
      prev.disabled = this.page === 0;
      prev.addEventListener('click', () => {
        this.page--;
        this.renderList();
      });
      const label = el('span', undefined, ` page ${this.page + 1} / ${pages} `);
      const next = el('button', 'pager-btn', 'next');
      next.disabled = this.page >= pages - 1;
      next.addEventListener('click', () => {
        this.page++;
        this.renderList();
      });
      this.pager.append(prev, label, next);
    }
  }

  private async select(sol: SolutionPayload): Promise<void> {
    this.selected = sol;
    await this.renderSelected();
  }

  private async renderSelected(): Promise<void> {
    const sol = this.selected;
    if (!sol) return;
    const board = new BoardView(this.boardBox, sol.n);
    board.setPlaced(sol.points, null);
    this.detail.textContent =
      `size ${sol.size}, points ${sol.points.map(([x, y]) => `(${x},${y})`).join(' ')}`;
    if (this.overlay) {
      const mask = await getDominated(sol.n, sol.points);
      board.setClass(mask.dominated, 'dominated');
      const uncovered: [number, number][] = [];
      const covered = new Set(mask.dominated.map(([x, y]) => `${x},${y}`));
      for (let y = 1; y <= sol.n; y++) {
        for (let x = 1; x <= sol.n; x++) {
          if (!covered.has(`${x},${y}`)) uncovered.push([x, y]);
        }
      }
      board.setClass(uncovered, 'uncovered');
    }
  }

  currentPayload(): SolutionsPayload | null {
    return this.payload;
  }

  boardBoxElement(): HTMLElement {
    return this.boardBox;
  }
}
