// View-model for the dialogue screens.
//
// Every displayed string and number is taken verbatim from an API envelope;
// this module never classifies countries, never scores tasks, and never
// invents messages. Rejections from the server land in the banner unchanged,
// and a network failure leaves the view exactly as it was, with a retry
// offered instead of an optimistic update.

import type { Api, StandingCard, TaskRow } from "./api.js";

export type Screen = "country" | "offer" | "difficulty" | "tasks" | "done";

export interface ViewState {
  screen: Screen;
  sessionId: string | null;
  busy: boolean;
  banner: string | null;
  retryable: boolean;
  countryPrompt: string | null;
  preamble: string | null;
  standing: StandingCard | null;
  offerPrompt: string | null;
  difficultyPrompt: string | null;
  tasks: TaskRow[];
  points: number | null;
  farewell: string | null;
}

export const DIFFICULTY_CHOICES = ["HARD", "MEDIUM", "EASY"] as const;

function initialViewState(): ViewState {
  return {
    screen: "country",
    sessionId: null,
    busy: false,
    banner: null,
    retryable: false,
    countryPrompt: null,
    preamble: null,
    standing: null,
    offerPrompt: null,
    difficultyPrompt: null,
    tasks: [],
    points: null,
    farewell: null,
  };
}

type Failure = { kind: "error"; code: string; message: string } | {
  kind: "network";
  message: string;
};

export class SessionFlow {
  private state = initialViewState();
  private listeners: Array<(state: ViewState) => void> = [];
  private lastAction: (() => Promise<void>) | null = null;

  constructor(private readonly api: Api) {}

  getState(): ViewState {
    return this.state;
  }

  subscribe(listener: (state: ViewState) => void): void {
    this.listeners.push(listener);
  }

  private update(patch: Partial<ViewState>): void {
    this.state = { ...this.state, ...patch };
    for (const listener of this.listeners) {
      listener(this.state);
    }
  }

  private begin(action: () => Promise<void>): void {
    this.lastAction = action;
    this.update({ busy: true, banner: null, retryable: false });
  }

  private fail(failure: Failure): void {
    this.update({
      busy: false,
      banner: failure.message,
      retryable: failure.kind === "network",
    });
  }

  async start(): Promise<void> {
    if (this.state.busy) {
      return;
    }
    const action = async () => {
      const result = await this.api.createSession();
      if (result.kind !== "ok") {
        this.fail(result);
        return;
      }
      this.update({
        busy: false,
        screen: "country",
        sessionId: result.payload.id,
        countryPrompt: result.message ?? null,
      });
    };
    this.begin(action);
    await action();
  }

  async submitCountry(name: string): Promise<void> {
    if (this.state.busy || this.state.screen !== "country" || !this.state.sessionId) {
      return;
    }
    const sessionId = this.state.sessionId;
    const action = async () => {
      const result = await this.api.submitCountry(sessionId, name);
      if (result.kind !== "ok") {
        this.fail(result);
        return;
      }
      this.update({
        busy: false,
        screen: "offer",
        preamble: result.message ?? null,
        standing: result.payload.standing,
        offerPrompt: result.payload.next_prompt,
      });
    };
    this.begin(action);
    await action();
  }

  async answer(reply: string): Promise<void> {
    if (this.state.busy || this.state.screen !== "offer" || !this.state.sessionId) {
      return;
    }
    const sessionId = this.state.sessionId;
    const action = async () => {
      const result = await this.api.answer(sessionId, reply);
      if (result.kind !== "ok") {
        this.fail(result);
        return;
      }
      if (result.payload.state === "Terminated") {
        this.update({ busy: false, screen: "done", farewell: result.message ?? null });
      } else {
        this.update({
          busy: false,
          screen: "difficulty",
          difficultyPrompt: result.message ?? null,
        });
      }
    };
    this.begin(action);
    await action();
  }

  async chooseDifficulty(reply: string): Promise<void> {
    const onPicker = this.state.screen === "difficulty" || this.state.screen === "tasks";
    if (this.state.busy || !onPicker || !this.state.sessionId) {
      return;
    }
    const sessionId = this.state.sessionId;
    const action = async () => {
      const issued = await this.api.chooseDifficulty(sessionId, reply);
      if (issued.kind !== "ok") {
        this.fail(issued);
        return;
      }
      const totals = await this.api.points(sessionId);
      if (totals.kind !== "ok") {
        this.fail(totals);
        return;
      }
      this.update({
        busy: false,
        screen: "tasks",
        tasks: issued.payload.tasks,
        points: totals.payload.total,
      });
    };
    this.begin(action);
    await action();
  }

  async toggleTask(index: number): Promise<void> {
    if (this.state.busy || this.state.screen !== "tasks" || !this.state.sessionId) {
      return;
    }
    const sessionId = this.state.sessionId;
    const task = this.state.tasks.find((row) => row.index === index);
    if (!task) {
      return;
    }
    const mark = task.mark === "O" ? "X" : "O";
    const action = async () => {
      const marked = await this.api.markTask(sessionId, index, mark);
      if (marked.kind !== "ok") {
        this.fail(marked);
        return;
      }
      const tasks = this.state.tasks.map((row) =>
        row.index === index ? { ...row, mark: marked.payload.mark } : row,
      );
      const totals = await this.api.points(sessionId);
      if (totals.kind !== "ok") {
        this.fail(totals);
        return;
      }
      this.update({ busy: false, tasks, points: totals.payload.total });
    };
    this.begin(action);
    await action();
  }

  async retry(): Promise<void> {
    if (this.state.busy || !this.state.retryable || !this.lastAction) {
      return;
    }
    const action = this.lastAction;
    this.update({ busy: true, banner: null, retryable: false });
    await action();
  }
}
