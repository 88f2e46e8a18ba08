// SVG board widget. Pure rendering: which cells are legal, placed,
// dominated or blocked always comes from the caller.

const CELL = 36;
const PAD = 14;

export interface CellHandlers {
  onClick?: (x: number, y: number) => void;
  onHover?: (x: number, y: number | null) => void;
}

export class BoardView {
  readonly n: number;
  private cells = new Map<string, SVGRectElement>();
  private markers = new Map<string, SVGCircleElement>();
  private svg: SVGSVGElement;

  constructor(container: HTMLElement, n: number, handlers: CellHandlers = {}) {
    this.n = n;
    const side = n * CELL + 2 * PAD;
    const svg = document.createElementNS('http://www.w3.org/2000/svg', 'svg');
    svg.setAttribute('viewBox', `0 0 ${side} ${side}`);
    svg.setAttribute('class', 'board');
    svg.setAttribute('role', 'grid');
    // y grows downward: cell (1,1) is the top-left corner
    for (let y = 1; y <= n; y++) {
      for (let x = 1; x <= n; x++) {
        const rect = document.createElementNS(
          'http://www.w3.org/2000/svg',
          'rect',
        );
        rect.setAttribute('x', String(PAD + (x - 1) * CELL));
        rect.setAttribute('y', String(PAD + (y - 1) * CELL));
        rect.setAttribute('width', String(CELL));
        rect.setAttribute('height', String(CELL));
        rect.setAttribute('class', 'cell');
        rect.setAttribute('data-x', String(x));
        rect.setAttribute('data-y', String(y));
        const title = document.createElementNS(
          'http://www.w3.org/2000/svg',
          'title',
        );
        title.textContent = `(${x}, ${y})`;
        rect.appendChild(title);
        if (handlers.onClick) {
          rect.addEventListener('click', () => handlers.onClick!(x, y));
        }
        if (handlers.onHover) {
          rect.addEventListener('mouseenter', () => handlers.onHover!(x, y));
          rect.addEventListener('mouseleave', () => handlers.onHover!(x, null));
        }
        svg.appendChild(rect);
        this.cells.set(`${x},${y}`, rect);
      }
    }
    container.replaceChildren(svg);
    this.svg = svg;
  }

  cell(x: number, y: number): SVGRectElement | undefined {
    return this.cells.get(`${x},${y}`);
  }

  setClass(
    points: [number, number][],
    cls: string,
  ): void {
    for (const rect of this.cells.values()) rect.classList.remove(cls);
    for (const [x, y] of points) this.cell(x, y)?.classList.add(cls);
  }

  setPlaced(points: [number, number][], lastEngine: [number, number] | null): void {
    for (const marker of this.markers.values()) marker.remove();
    this.markers.clear();
    for (const [x, y] of points) {
      const c = document.createElementNS('http://www.w3.org/2000/svg', 'circle');
      c.setAttribute('cx', String(PAD + (x - 0.5) * CELL));
      c.setAttribute('cy', String(PAD + (y - 0.5) * CELL));
      c.setAttribute('r', String(CELL * 0.3));
      const isEngine = lastEngine && lastEngine[0] === x && lastEngine[1] === y;
      c.setAttribute('class', isEngine ? 'marker engine' : 'marker');
      this.markers.set(`${x},${y}`, c);
      this.svg.appendChild(c);
    }
  }

  marker(x: number, y: number): SVGCircleElement | undefined {
    return this.markers.get(`${x},${y}`);
  }
}
