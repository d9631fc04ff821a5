// Envelope types mirroring the HTTP service, and a thin fetch client.
//
// Every call resolves to an ApiResult: "ok" with the payload, "error" with
// the server's code and exact message, or "network" when the request never
// produced a valid envelope. Nothing here interprets the data.

export interface SessionRef {
  id: string;
  state: string;
}

export interface CountryRecord {
  name: string;
  mismanaged_share_pct: number;
  waste_per_capita_tonnes: number;
}

export interface StandingCard {
  standing: string;
  short_label: string | null;
  long_label: string;
  reason: string;
}

export interface CountryOutcome {
  state: string;
  country: CountryRecord;
  standing: StandingCard;
  next_prompt: string;
}

export interface AnswerOutcome {
  state: string;
}

export interface TaskRow {
  index: number;
  text: string;
  difficulty: string;
  mark: string;
}

export interface TaskList {
  state: string;
  count: number;
  tasks: TaskRow[];
  difficulty?: string;
}

export interface MarkOutcome {
  index: number;
  mark: string;
  award: number;
  total: number;
}

export interface PointsTotal {
  total: number;
}

export type ApiResult<P> =
  | { kind: "ok"; message?: string; payload: P }
  | { kind: "error"; code: string; message: string }
  | { kind: "network"; message: string };

export interface Api {
  createSession(): Promise<ApiResult<SessionRef>>;
  submitCountry(sessionId: string, name: string): Promise<ApiResult<CountryOutcome>>;
  answer(sessionId: string, reply: string): Promise<ApiResult<AnswerOutcome>>;
  chooseDifficulty(sessionId: string, reply: string): Promise<ApiResult<TaskList>>;
  listTasks(sessionId: string): Promise<ApiResult<TaskList>>;
  markTask(sessionId: string, index: number, mark: string): Promise<ApiResult<MarkOutcome>>;
  points(sessionId: string): Promise<ApiResult<PointsTotal>>;
}

export class ApiClient implements Api {
  constructor(private readonly baseUrl: string) {}

  private async request<P>(
    method: string,
    path: string,
    body?: unknown,
  ): Promise<ApiResult<P>> {
    let response: Response;
    try {
      response = await fetch(this.baseUrl + path, {
        method,
        headers: body === undefined ? undefined : { "Content-Type": "application/json" },
        body: body === undefined ? undefined : JSON.stringify(body),
      });
    } catch (error) {
      return {
        kind: "network",
        message: error instanceof Error ? error.message : String(error),
      };
    }
    let envelope: unknown;
    try {
      envelope = await response.json();
    } catch {
      return { kind: "network", message: "the server did not return a JSON envelope" };
    }
    const record = envelope as Record<string, unknown> | null;
    if (record && record.status === "ok") {
      return {
        kind: "ok",
        message: record.message as string | undefined,
        payload: record.payload as P,
      };
    }
    if (record && record.status === "error") {
      return {
        kind: "error",
        code: String(record.code),
        message: String(record.message),
      };
    }
    return { kind: "network", message: "unrecognized response envelope" };
  }

  createSession(): Promise<ApiResult<SessionRef>> {
    return this.request("POST", "/sessions");
  }

  submitCountry(sessionId: string, name: string): Promise<ApiResult<CountryOutcome>> {
    return this.request("POST", `/sessions/${sessionId}/country`, { name });
  }

  answer(sessionId: string, reply: string): Promise<ApiResult<AnswerOutcome>> {
    return this.request("POST", `/sessions/${sessionId}/answer`, { reply });
  }

  chooseDifficulty(sessionId: string, reply: string): Promise<ApiResult<TaskList>> {
    return this.request("POST", `/sessions/${sessionId}/difficulty`, { reply });
  }

  listTasks(sessionId: string): Promise<ApiResult<TaskList>> {
    return this.request("GET", `/sessions/${sessionId}/tasks`);
  }

  markTask(sessionId: string, index: number, mark: string): Promise<ApiResult<MarkOutcome>> {
    return this.request("POST", `/sessions/${sessionId}/tasks/${index}/mark`, { mark });
  }

  points(sessionId: string): Promise<ApiResult<PointsTotal>> {
    return this.request("GET", `/sessions/${sessionId}/points`);
  }
}
