// Thin DOM layer: rebuilds the app container from the current ViewState.
// All strings and numbers shown here arrive through the view-model from the
// API; this file only arranges them.

import { DIFFICULTY_CHOICES, SessionFlow, ViewState } from "./flow.js";

function el<K extends keyof HTMLElementTagNameMap>(
  tag: K,
  className?: string,
  text?: string,
): HTMLElementTagNameMap[K] {
  const node = document.createElement(tag);
  if (className) {
    node.className = className;
  }
  if (text !== undefined) {
    node.textContent = text;
  }
  return node;
}

function button(label: string, state: ViewState, onClick: () => void): HTMLButtonElement {
  const node = el("button", "action", label);
  node.type = "button";
  node.disabled = state.busy;
  node.addEventListener("click", onClick);
  return node;
}

function renderBanner(state: ViewState, flow: SessionFlow): HTMLElement {
  const banner = el("div", "banner", state.banner ?? "");
  if (state.retryable) {
    banner.append(" ");
    banner.append(button("Retry", state, () => void flow.retry()));
  }
  return banner;
}

function renderCountry(state: ViewState, flow: SessionFlow): HTMLElement {
  const section = el("section", "screen");
  if (state.countryPrompt) {
    section.append(el("p", "prompt", state.countryPrompt));
  }
  const form = el("form");
  const input = el("input");
  input.name = "country";
  input.autofocus = true;
  input.disabled = state.busy;
  const submit = button("Search", state, () => {});
  submit.type = "submit";
  form.append(input, submit);
  form.addEventListener("submit", (event) => {
    event.preventDefault();
    void flow.submitCountry(input.value);
  });
  section.append(form);
  return section;
}

function renderStandingCard(state: ViewState): HTMLElement {
  const card = el("div", "standing-card");
  if (state.preamble) {
    card.append(el("p", "preamble", state.preamble));
  }
  if (state.standing) {
    if (state.standing.short_label !== null) {
      card.append(el("p", "short-label", state.standing.short_label));
    }
    card.append(el("p", "long-label", state.standing.long_label));
    card.append(el("p", "reason", state.standing.reason));
  }
  return card;
}

function renderOffer(state: ViewState, flow: SessionFlow): HTMLElement {
  const section = el("section", "screen");
  section.append(renderStandingCard(state));
  if (state.offerPrompt) {
    section.append(el("p", "prompt", state.offerPrompt));
  }
  const choices = el("div", "choices");
  choices.append(button("YES", state, () => void flow.answer("YES")));
  choices.append(button("NO", state, () => void flow.answer("NO")));
  section.append(choices);
  return section;
}

function renderDifficultyPicker(state: ViewState, flow: SessionFlow): HTMLElement {
  const choices = el("div", "choices");
  for (const difficulty of DIFFICULTY_CHOICES) {
    choices.append(button(difficulty, state, () => void flow.chooseDifficulty(difficulty)));
  }
  return choices;
}

function renderDifficulty(state: ViewState, flow: SessionFlow): HTMLElement {
  const section = el("section", "screen");
  if (state.difficultyPrompt) {
    section.append(el("p", "prompt", state.difficultyPrompt));
  }
  section.append(renderDifficultyPicker(state, flow));
  return section;
}

function renderTasks(state: ViewState, flow: SessionFlow): HTMLElement {
  const section = el("section", "screen");
  if (state.points !== null) {
    section.append(el("p", "points", `Points: ${state.points}`));
  }
  const list = el("ul", "tasks");
  for (const task of state.tasks) {
    const item = el("li", "task");
    const toggle = button(task.mark, state, () => void flow.toggleTask(task.index));
    toggle.classList.add("mark");
    item.append(toggle);
    item.append(el("span", "difficulty", `[${task.difficulty}] `));
    item.append(el("span", "text", task.text));
    list.append(item);
  }
  section.append(list);
  const reissue = el("div", "reissue");
  reissue.append(el("p", "prompt", "Start over at a different difficulty:"));
  reissue.append(renderDifficultyPicker(state, flow));
  section.append(reissue);
  return section;
}

function renderDone(state: ViewState): HTMLElement {
  const section = el("section", "screen");
  if (state.farewell) {
    section.append(el("p", "farewell", state.farewell));
  }
  return section;
}

export function render(root: HTMLElement, flow: SessionFlow): void {
  const state = flow.getState();
  root.replaceChildren();
  if (state.banner !== null) {
    root.append(renderBanner(state, flow));
  }
  switch (state.screen) {
    case "country":
      root.append(renderCountry(state, flow));
      break;
    case "offer":
      root.append(renderOffer(state, flow));
      break;
    case "difficulty":
      root.append(renderDifficulty(state, flow));
      break;
    case "tasks":
      root.append(renderTasks(state, flow));
      break;
    case "done":
      root.append(renderDone(state));
      break;
  }
}
