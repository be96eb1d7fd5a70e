// Application shell: toolbar (person picker, range, window, method, view
// tabs) plus the active view. All state transitions go through navigate(),
// which rewrites the URL; rendering is latest-wins (stale fetches abort).

import { Api } from "./api.js";
import {
  DEFAULT_STATE,
  ExplorationState,
  Method,
  View,
  parseState,
  serializeState,
} from "./state.js";
import { renderView } from "./views.js";

const VIEW_LABELS: Record<View, string> = {
  mentions: "Mentions",
  correlation: "Correlation",
  matrix: "Matrix",
  mds: "Map",
};

export class App {
  private inflight: AbortController | null = null;

  constructor(
    private readonly root: HTMLElement,
    readonly api: Api,
    private readonly navigate: (next: ExplorationState) => void,
  ) {}

  async render(state: ExplorationState): Promise<void> {
    this.inflight?.abort();
    const controller = new AbortController();
    this.inflight = controller;

    const doc = this.root.ownerDocument;
    this.root.textContent = "";
    this.root.appendChild(this.toolbar(doc, state));
    const container = doc.createElement("main");
    container.className = "view";
    this.root.appendChild(container);
    await renderView(container, {
      doc,
      api: this.api,
      state,
      navigate: this.navigate,
      signal: controller.signal,
    });
  }

  private toolbar(doc: Document, state: ExplorationState): HTMLElement {
    const bar = doc.createElement("header");
    bar.className = "toolbar";

    bar.appendChild(this.personPicker(doc, state));

    const from = doc.createElement("input");
    from.type = "date";
    from.className = "range-from";
    from.value = state.from ?? "";
    from.addEventListener("change", () => {
      this.navigate({ ...state, from: from.value || null });
    });
    const to = doc.createElement("input");
    to.type = "date";
    to.className = "range-to";
    to.value = state.to ?? "";
    to.addEventListener("change", () => {
      this.navigate({ ...state, to: to.value || null });
    });
    const range = doc.createElement("span");
    range.className = "range-controls";
    range.append("from ", from, " to ", to);
    bar.appendChild(range);

    const n = doc.createElement("input");
    n.type = "number";
    n.min = "1";
    n.className = "n-input";
    n.value = String(state.n);
    n.addEventListener("change", () => {
      const parsed = Number.parseInt(n.value, 10);
      if (Number.isFinite(parsed) && parsed >= 1) {
        this.navigate({ ...state, n: parsed });
      }
    });
    const nWrap = doc.createElement("label");
    nWrap.className = "n-wrap";
    nWrap.append("window ", n, " days");
    bar.appendChild(nWrap);

    const method = doc.createElement("select");
    method.className = "method-select";
    for (const m of ["pearson", "cosine"] as Method[]) {
      const opt = doc.createElement("option");
      opt.value = m;
      opt.textContent = m;
      opt.selected = m === state.method;
      method.appendChild(opt);
    }
    method.addEventListener("change", () => {
      this.navigate({ ...state, method: method.value as Method });
    });
    bar.appendChild(method);

    const tabs = doc.createElement("nav");
    tabs.className = "tabs";
    (Object.keys(VIEW_LABELS) as View[]).forEach((view) => {
      const tab = doc.createElement("button");
      tab.type = "button";
      tab.className = view === state.view ? "tab active" : "tab";
      tab.dataset.view = view;
      tab.textContent = VIEW_LABELS[view];
      tab.addEventListener("click", () => this.navigate({ ...state, view }));
      tabs.appendChild(tab);
    });
    bar.appendChild(tabs);
    return bar;
  }

  private personPicker(doc: Document, state: ExplorationState): HTMLElement {
    const wrap = doc.createElement("div");
    wrap.className = "person-picker";

    for (const person of state.persons) {
      const chip = doc.createElement("span");
      chip.className = "chip";
      chip.textContent = person;
      const remove = doc.createElement("button");
      remove.type = "button";
      remove.className = "chip-remove";
      remove.textContent = "×";
      remove.setAttribute("aria-label", `remove ${person}`);
      remove.addEventListener("click", () => {
        this.navigate({
          ...state,
          persons: state.persons.filter((p) => p !== person),
        });
      });
      chip.appendChild(remove);
      wrap.appendChild(chip);
    }

    const input = doc.createElement("input");
    input.type = "text";
    input.placeholder = "add person…";
    input.className = "person-input";
    const listId = "person-options";
    input.setAttribute("list", listId);
    const datalist = doc.createElement("datalist");
    datalist.id = listId;
    wrap.appendChild(input);
    wrap.appendChild(datalist);

    // autocomplete from the ranked person list; a short list covers most
    // queries because mention counts are so top-heavy
    input.addEventListener("input", () => {
      const q = input.value.trim();
      this.api
        .persons({ q: q || undefined, limit: 10 })
        .then((payload) => {
          datalist.textContent = "";
          for (const { name } of payload.persons) {
            const opt = doc.createElement("option");
            opt.value = name;
            datalist.appendChild(opt);
          }
        })
        .catch(() => undefined);
    });
    const add = () => {
      const name = input.value.trim();
      if (name && !state.persons.includes(name)) {
        this.navigate({ ...state, persons: [...state.persons, name] });
      }
      input.value = "";
    };
    input.addEventListener("change", add);
    input.addEventListener("keydown", (ev) => {
      if ((ev as KeyboardEvent).key === "Enter") add();
    });
    return wrap;
  }
}

export function startApp(root: HTMLElement, api: Api = new Api()): App {
  const win = root.ownerDocument.defaultView as Window;
  const navigate = (next: ExplorationState) => {
    const qs = serializeState(next);
    win.history.pushState(null, "", qs ? `?${qs}` : win.location.pathname);
    void app.render(next);
  };
  const app = new App(root, api, navigate);
  win.addEventListener("popstate", () => {
    void app.render(parseState(win.location.search));
  });
  void app.render(parseState(win.location.search) ?? DEFAULT_STATE);
  return app;
}
