// Gallery view against the live service: counts mirror the API, the
// dominated overlay comes from server masks, and a cache miss surfaces
// the server's hint instead of a blank page.
import { beforeAll, describe, expect, it } from 'vitest';
import { getDominated, getSolutions, setApiBase } from '../src/api';
import { BoardView } from '../src/board';
import { GalleryView } from '../src/gallery';
import { BASE } from './global-setup';

beforeAll(() => {
  setApiBase(BASE);
});

function makeView(): { root: HTMLElement; view: GalleryView } {
  const root = document.createElement('div');
  document.body.appendChild(root);
  return { root, view: new GalleryView(root) };
}

describe('gallery view', () => {
  it('shows exactly one symmetry class of size 8 for n=10', async () => {
    const { root, view } = makeView();
    await view.load(10, 'independent');
    const payload = view.currentPayload()!;
    expect(payload.classes).toBe(1);
    expect(payload.minimum).toBe(8);
    expect(payload.witnesses.length).toBe(1);
    expect(payload.witnesses[0].size).toBe(8);
    const counts = root.querySelector('.counts') as HTMLElement;
    expect(counts.textContent).toContain('minimum 8');
    expect(counts.textContent).toContain('1 up to symmetry');
    // one witness, one list entry, board rendered with 8 markers
    expect(root.querySelectorAll('.solution-entry').length).toBe(1);
    expect(view.boardBoxElement().querySelectorAll('circle').length).toBe(8);
    root.remove();
  });

  it('lists all 44 classes for n=8 and the counts match the API verbatim', async () => {
    const { root, view } = makeView();
    await view.load(8, 'independent');
    const payload = view.currentPayload()!;
    const direct = await getSolutions(8, 'independent');
    expect(payload.minimum).toBe(direct.minimum);
    expect(payload.distinct).toBe(direct.distinct);
    expect(payload.classes).toBe(direct.classes);
    expect(payload.classes).toBe(44);
    expect(payload.distinct).toBe(228);
    const counts = root.querySelector('.counts') as HTMLElement;
    expect(counts.textContent).toBe(
      'minimum 8: 228 distinct sets, 44 up to symmetry',
    );
    // walking the pager visits every class exactly once
    let total = 0;
    let pages = 0;
    for (;;) {
      const entries = root.querySelectorAll('.solution-entry');
      total += entries.length;
      pages += 1;
      expect(entries[0].textContent).toBe(`#${(pages - 1) * 12 + 1} size 8`);
      const next = [...root.querySelectorAll('.pager-btn')].find(
        (b) => b.textContent === 'next',
      ) as HTMLButtonElement;
      if (next.disabled) break;
      next.dispatchEvent(new MouseEvent('click', { bubbles: true }));
    }
    expect(pages).toBe(4);
    expect(total).toBe(44);
    root.remove();
  });

  it('overlay paints every cell dominated for a full solution', async () => {
    const { root, view } = makeView();
    await view.load(10, 'independent');
    const overlayBox = root.querySelector('#gallery-overlay') as HTMLInputElement;
    overlayBox.checked = true;
    overlayBox.dispatchEvent(new Event('change'));
    await view.settled;
    const boardBox = view.boardBoxElement();
    expect(boardBox.querySelectorAll('.cell.dominated').length).toBe(100);
    expect(boardBox.querySelectorAll('.cell.uncovered').length).toBe(0);
    root.remove();
  });

  it('renders uncovered cells distinctly for a non-dominating subset', async () => {
    const payload = await getSolutions(10, 'independent');
    const sol = payload.witnesses[0];
    const subset = sol.points.slice(0, 3);
    const mask = await getDominated(sol.n, subset);
    expect(mask.isDominating).toBe(false);

    const root = document.createElement('div');
    document.body.appendChild(root);
    const board = new BoardView(root, sol.n);
    board.setPlaced(subset, null);
    board.setClass(mask.dominated, 'dominated');
    const covered = new Set(mask.dominated.map(([x, y]) => `${x},${y}`));
    const uncovered: [number, number][] = [];
    for (let y = 1; y <= sol.n; y++) {
      for (let x = 1; x <= sol.n; x++) {
        if (!covered.has(`${x},${y}`)) uncovered.push([x, y]);
      }
    }
    board.setClass(uncovered, 'uncovered');
    expect(uncovered.length).toBeGreaterThan(0);
    expect(root.querySelectorAll('.cell.dominated').length).toBe(mask.count);
    expect(root.querySelectorAll('.cell.uncovered').length).toBe(100 - mask.count);
    // no cell carries both classes
    expect(root.querySelectorAll('.cell.dominated.uncovered').length).toBe(0);
    root.remove();
  });

  it('shows the CLI hint from the server when a board is not cached', async () => {
    const { root, view } = makeView();
    await view.load(25, 'independent');
    expect(view.currentPayload()).toBeNull();
    const notice = root.querySelector('.notice') as HTMLElement;
    expect(notice.hidden).toBe(false);
    expect(notice.textContent).toContain('gridlock search --n 25');
    root.remove();
  });
});
