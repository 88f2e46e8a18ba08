(function(exports) {
	Object.defineProperty(exports, Symbol.toStringTag, { value: "Module" });
	//#region src/api.ts
	let base = "";
	var ApiError = class extends Error {
		constructor(status, detail) {
			super(`API error ${status}`);
			this.status = status;
			this.detail = detail;
		}
	};
	async function getJson(path) {
		const res = await fetch(base + path);
		const body = await res.json();
		if (!res.ok) throw new ApiError(res.status, body.detail);
		return body;
	}
	async function postJson(path, payload) {
		const res = await fetch(base + path, {
			method: "POST",
			headers: { "Content-Type": "application/json" },
			body: JSON.stringify(payload)
		});
		const body = await res.json();
		if (!res.ok) throw new ApiError(res.status, body.detail);
		return body;
	}
	function createGame(n, engine) {
		return postJson("/api/game", {
			n,
			engine
		});
	}
	async function postMove(id, x, y) {
		try {
			return {
				ok: true,
				game: await postJson(`/api/game/${id}/move`, {
					x,
					y
				})
			};
		} catch (err) {
			if (err instanceof ApiError && err.status === 409) return {
				ok: false,
				rejection: err.detail
			};
			throw err;
		}
	}
	function getSolutions(n, mode) {
		return getJson(`/api/solutions?n=${n}&mode=${mode}`);
	}
	function getDominated(n, points) {
		const enc = points.map(([x, y]) => `${x},${y}`).join(";");
		return getJson(`/api/dominated?n=${n}&points=${encodeURIComponent(enc)}`);
	}
	//#endregion
	//#region src/board.ts
	const CELL = 36;
	const PAD = 14;
	var BoardView = class {
		constructor(container, n, handlers = {}) {
			this.cells = /* @__PURE__ */ new Map();
			this.markers = /* @__PURE__ */ new Map();
			this.n = n;
			const side = n * CELL + 28;
			const svg = document.createElementNS("http://www.w3.org/2000/svg", "svg");
			svg.setAttribute("viewBox", `0 0 ${side} ${side}`);
			svg.setAttribute("class", "board");
			svg.setAttribute("role", "grid");
			for (let y = 1; y <= n; y++) for (let x = 1; x <= n; x++) {
				const rect = document.createElementNS("http://www.w3.org/2000/svg", "rect");
				rect.setAttribute("x", String(PAD + (x - 1) * CELL));
				rect.setAttribute("y", String(PAD + (y - 1) * CELL));
				rect.setAttribute("width", String(CELL));
				rect.setAttribute("height", String(CELL));
				rect.setAttribute("class", "cell");
				rect.setAttribute("data-x", String(x));
				rect.setAttribute("data-y", String(y));
				const title = document.createElementNS("http://www.w3.org/2000/svg", "title");
				title.textContent = `(${x}, ${y})`;
				rect.appendChild(title);
				if (handlers.onClick) rect.addEventListener("click", () => handlers.onClick(x, y));
				if (handlers.onHover) {
					rect.addEventListener("mouseenter", () => handlers.onHover(x, y));
					rect.addEventListener("mouseleave", () => handlers.onHover(x, null));
				}
				svg.appendChild(rect);
				this.cells.set(`${x},${y}`, rect);
			}
			container.replaceChildren(svg);
			this.svg = svg;
		}
		cell(x, y) {
			return this.cells.get(`${x},${y}`);
		}
		setClass(points, cls) {
			for (const rect of this.cells.values()) rect.classList.remove(cls);
			for (const [x, y] of points) this.cell(x, y)?.classList.add(cls);
		}
		setPlaced(points, lastEngine) {
			for (const marker of this.markers.values()) marker.remove();
			this.markers.clear();
			for (const [x, y] of points) {
				const c = document.createElementNS("http://www.w3.org/2000/svg", "circle");
				c.setAttribute("cx", String(PAD + (x - .5) * CELL));
				c.setAttribute("cy", String(PAD + (y - .5) * CELL));
				c.setAttribute("r", String(CELL * .3));
				const isEngine = lastEngine && lastEngine[0] === x && lastEngine[1] === y;
				c.setAttribute("class", isEngine ? "marker engine" : "marker");
				this.markers.set(`${x},${y}`, c);
				this.svg.appendChild(c);
			}
		}
		marker(x, y) {
			return this.markers.get(`${x},${y}`);
		}
	};
	//#endregion
	//#region src/gallery.ts
	const PAGE_SIZE = 12;
	function el$1(tag, cls, text) {
		const node = document.createElement(tag);
		if (cls) node.className = cls;
		if (text !== void 0) node.textContent = text;
		return node;
	}
	var GalleryView = class {
		constructor(root) {
			this.payload = null;
			this.page = 0;
			this.selected = null;
			this.overlay = false;
			this.settled = Promise.resolve();
			this.root = root;
			const controls = el$1("div", "controls");
			const nInput = el$1("input");
			nInput.type = "number";
			nInput.min = "2";
			nInput.value = "8";
			nInput.id = "gallery-n";
			const modeSelect = el$1("select");
			modeSelect.id = "gallery-mode";
			for (const mode of ["independent", "general"]) {
				const opt = el$1("option", void 0, mode);
				opt.value = mode;
				modeSelect.appendChild(opt);
			}
			const loadBtn = el$1("button", "start", "load");
			loadBtn.id = "gallery-load";
			loadBtn.addEventListener("click", () => {
				this.settled = this.load(Number(nInput.value), modeSelect.value);
			});
			const overlayLabel = el$1("label", "overlay-toggle");
			const overlayBox = el$1("input");
			overlayBox.type = "checkbox";
			overlayBox.id = "gallery-overlay";
			overlayBox.addEventListener("change", () => {
				this.overlay = overlayBox.checked;
				this.settled = this.renderSelected();
			});
			overlayLabel.append(overlayBox, " dominated overlay");
			controls.append("board ", nInput, " ", modeSelect, " ", loadBtn, " ", overlayLabel);
			this.counts = el$1("p", "counts");
			this.notice = el$1("p", "notice");
			this.notice.hidden = true;
			this.list = el$1("div", "solution-list");
			this.pager = el$1("div", "pager");
			this.boardBox = el$1("div", "board-box");
			this.detail = el$1("p", "detail");
			root.replaceChildren(controls, this.counts, this.notice, this.list, this.pager, this.detail, this.boardBox);
		}
		async load(n, mode) {
			this.notice.hidden = true;
			try {
				this.payload = await getSolutions(n, mode);
			} catch (err) {
				this.payload = null;
				this.counts.textContent = "";
				this.list.replaceChildren();
				this.pager.replaceChildren();
				this.boardBox.replaceChildren();
				if (err instanceof ApiError && err.status === 404) {
					this.notice.textContent = String(err.detail);
					this.notice.hidden = false;
					return;
				}
				throw err;
			}
			this.page = 0;
			const p = this.payload;
			const tag = p.exhausted ? "" : " (search not exhausted)";
			this.counts.textContent = `minimum ${p.minimum}: ${p.distinct} distinct sets, ${p.classes} up to symmetry${tag}`;
			this.renderList();
			if (p.witnesses.length > 0) await this.select(p.witnesses[0]);
		}
		renderList() {
			if (!this.payload) return;
			const start = this.page * PAGE_SIZE;
			const visible = this.payload.witnesses.slice(start, start + PAGE_SIZE);
			this.list.replaceChildren();
			visible.forEach((sol, i) => {
				const btn = el$1("button", "solution-entry", `#${start + i + 1} size ${sol.size}`);
				btn.addEventListener("click", () => {
					this.settled = this.select(sol);
				});
				this.list.appendChild(btn);
			});
			this.pager.replaceChildren();
			const pages = Math.ceil(this.payload.witnesses.length / PAGE_SIZE);
			if (pages > 1) {
				const prev = el$1("button", "pager-btn", "prev");
				prev.disabled = this.page === 0;
				prev.addEventListener("click", () => {
					this.page--;
					this.renderList();
				});
				const label = el$1("span", void 0, ` page ${this.page + 1} / ${pages} `);
				const next = el$1("button", "pager-btn", "next");
				next.disabled = this.page >= pages - 1;
				next.addEventListener("click", () => {
					this.page++;
					this.renderList();
				});
				this.pager.append(prev, label, next);
			}
		}
		async select(sol) {
			this.selected = sol;
			await this.renderSelected();
		}
		async renderSelected() {
			const sol = this.selected;
			if (!sol) return;
			const board = new BoardView(this.boardBox, sol.n);
			board.setPlaced(sol.points, null);
			this.detail.textContent = `size ${sol.size}, points ${sol.points.map(([x, y]) => `(${x},${y})`).join(" ")}`;
			if (this.overlay) {
				const mask = await getDominated(sol.n, sol.points);
				board.setClass(mask.dominated, "dominated");
				const uncovered = [];
				const covered = new Set(mask.dominated.map(([x, y]) => `${x},${y}`));
				for (let y = 1; y <= sol.n; y++) for (let x = 1; x <= sol.n; x++) if (!covered.has(`${x},${y}`)) uncovered.push([x, y]);
				board.setClass(uncovered, "uncovered");
			}
		}
		currentPayload() {
			return this.payload;
		}
		boardBoxElement() {
			return this.boardBox;
		}
	};
	//#endregion
	//#region src/play.ts
	function el(tag, cls, text) {
		const node = document.createElement(tag);
		if (cls) node.className = cls;
		if (text !== void 0) node.textContent = text;
		return node;
	}
	async function buildBlockingPairs(game) {
		const out = /* @__PURE__ */ new Map();
		const placed = game.state.placed;
		const legal = new Set(game.legalMoves.map(([x, y]) => `${x},${y}`));
		const occupied = new Set(placed.map(([x, y]) => `${x},${y}`));
		const open = [];
		for (let y = 1; y <= game.state.n; y++) for (let x = 1; x <= game.state.n; x++) {
			const key = `${x},${y}`;
			if (!legal.has(key) && !occupied.has(key)) open.push(key);
		}
		if (open.length === 0) return out;
		for (let i = 0; i < placed.length; i++) for (let j = i + 1; j < placed.length; j++) {
			const mask = await getDominated(game.state.n, [placed[i], placed[j]]);
			for (const [x, y] of mask.dominated) {
				const key = `${x},${y}`;
				if (!out.has(key) && !legal.has(key) && !occupied.has(key)) out.set(key, [placed[i], placed[j]]);
			}
		}
		return out;
	}
	var PlayView = class {
		constructor(root) {
			this.board = null;
			this.game = null;
			this.blocking = /* @__PURE__ */ new Map();
			this.busy = false;
			this.settled = Promise.resolve();
			this.root = root;
			const controls = el("div", "controls");
			const nInput = el("input");
			nInput.type = "number";
			nInput.min = "1";
			nInput.max = "10";
			nInput.value = "4";
			nInput.id = "play-n";
			const engineSelect = el("select");
			engineSelect.id = "play-engine";
			for (const side of [
				"second",
				"first",
				"none"
			]) {
				const opt = el("option", void 0, side);
				opt.value = side;
				engineSelect.appendChild(opt);
			}
			const startBtn = el("button", "start", "new game");
			startBtn.id = "play-start";
			startBtn.addEventListener("click", () => {
				this.settled = this.start(Number(nInput.value), engineSelect.value);
			});
			controls.append("board ", nInput, " engine plays ", engineSelect, " ", startBtn);
			this.status = el("p", "status", "no game yet");
			this.banner = el("p", "banner");
			this.banner.hidden = true;
			this.toast = el("p", "toast");
			this.toast.hidden = true;
			this.boardBox = el("div", "board-box");
			root.replaceChildren(controls, this.status, this.banner, this.toast, this.boardBox);
		}
		async start(n, engine) {
			try {
				const game = await createGame(n, engine);
				this.game = game;
				this.board = new BoardView(this.boardBox, n, {
					onClick: (x, y) => {
						this.settled = this.click(x, y);
					},
					onHover: (x, y) => this.hover(x, y)
				});
				await this.apply(game);
			} catch (err) {
				this.showToast(`could not start game: ${err}`);
			}
		}
		async click(x, y) {
			if (!this.game || !this.board || this.busy || this.game.over) return;
			`${x}${y}`;
			if (!this.game.legalMoves.some(([a, b]) => a === x && b === y)) return;
			this.busy = true;
			try {
				const result = await postMove(this.game.id, x, y);
				if (result.ok) await this.apply(result.game);
				else this.showToast(`rejected: ${result.rejection.reason}`);
			} catch (err) {
				this.showToast(`move failed: ${err}`);
			} finally {
				this.busy = false;
			}
		}
		async apply(game) {
			this.game = game;
			if (!this.board) return;
			this.board.setPlaced(game.state.placed, game.engineMove);
			this.board.setClass(game.legalMoves, "legal");
			this.blocking = await buildBlockingPairs(game);
			const placedCount = game.state.placed.length;
			if (game.over) {
				const name = game.winner === "first" ? "First" : "Second";
				this.banner.textContent = `${name} player wins`;
				this.banner.hidden = false;
				this.status.textContent = `game over after ${placedCount} placements`;
			} else {
				this.banner.hidden = true;
				const side = game.state.toMove === "first" ? "First" : "Second";
				let verdict = "";
				if (game.verdictIfKnown) verdict = ` (${game.verdictIfKnown.winner === "first" ? "First" : "Second"} wins with best play)`;
				this.status.textContent = `${side} to move, ${placedCount} placed${verdict}`;
			}
		}
		hover(x, y) {
			if (!this.board) return;
			if (y === null) {
				this.board.setClass([], "blocking");
				return;
			}
			const pair = this.blocking.get(`${x},${y}`);
			this.board.setClass(pair ? [pair[0], pair[1]] : [], "blocking");
		}
		showToast(message) {
			this.toast.textContent = message;
			this.toast.hidden = false;
			setTimeout(() => {
				this.toast.hidden = true;
			}, 4e3);
		}
		blockingPairFor(x, y) {
			return this.blocking.get(`${x},${y}`);
		}
		currentGame() {
			return this.game;
		}
		boardView() {
			return this.board;
		}
	};
	//#endregion
	//#region src/main.ts
	function mountApp(root) {
		const tabs = document.createElement("nav");
		tabs.className = "tabs";
		const playTab = document.createElement("button");
		playTab.textContent = "play";
		playTab.id = "tab-play";
		playTab.className = "tab active";
		const galleryTab = document.createElement("button");
		galleryTab.textContent = "gallery";
		galleryTab.id = "tab-gallery";
		galleryTab.className = "tab";
		const playRoot = document.createElement("section");
		playRoot.id = "view-play";
		const galleryRoot = document.createElement("section");
		galleryRoot.id = "view-gallery";
		galleryRoot.hidden = true;
		playTab.addEventListener("click", () => {
			playRoot.hidden = false;
			galleryRoot.hidden = true;
			playTab.classList.add("active");
			galleryTab.classList.remove("active");
		});
		galleryTab.addEventListener("click", () => {
			playRoot.hidden = true;
			galleryRoot.hidden = false;
			galleryTab.classList.add("active");
			playTab.classList.remove("active");
		});
		tabs.append(playTab, galleryTab);
		root.replaceChildren(tabs, playRoot, galleryRoot);
		return {
			play: new PlayView(playRoot),
			gallery: new GalleryView(galleryRoot)
		};
	}
	if (typeof document !== "undefined" && document.getElementById("app")) window.gridlockApp = mountApp(document.getElementById("app"));
	//#endregion
	exports.mountApp = mountApp;
	return exports;
})({});
