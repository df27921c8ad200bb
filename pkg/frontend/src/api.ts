/** Typed client for the discovery REST API. The UI holds no provider list
 * of its own: everything it shows originates from these calls. */

import {
  AdminConfigJson,
  ApiErrorBody,
  ArtifactDoc,
  AstJson,
  ProviderInfo,
  Suggestion,
  TeamConfigJson,
  UserConfigJson,
  ViewJson,
} from "./types.js";

export interface Identity {
  user?: string;
  role?: "user" | "team-admin" | "admin";
}

export class ApiError extends Error {
  readonly status: number;
  readonly body: ApiErrorBody;

  constructor(status: number, body: ApiErrorBody) {
    super(body.message);
    this.status = status;
    this.body = body;
  }
}

export interface ViewRequest {
  q?: string;
  inputs?: Record<string, string>;
}

export class ApiClient {
  readonly baseUrl: string;
  identity: Identity;

  constructor(baseUrl: string, identity: Identity = {}) {
    this.baseUrl = baseUrl.replace(/\/+$/, "");
    this.identity = identity;
  }

  private headers(extra: Record<string, string> = {}): Record<string, string> {
    const out: Record<string, string> = { ...extra };
    if (this.identity.user) out["X-User"] = this.identity.user;
    if (this.identity.role) out["X-Role"] = this.identity.role;
    return out;
  }

  private async request<T>(
    method: string,
    path: string,
    params?: Record<string, string | number | undefined>,
    body?: unknown,
    signal?: AbortSignal,
  ): Promise<T> {
    const url = new URL(this.baseUrl + path);
    for (const [key, value] of Object.entries(params ?? {})) {
      if (value !== undefined) url.searchParams.set(key, String(value));
    }
    const init: RequestInit = { method, headers: this.headers() };
    if (body !== undefined) {
      init.body = JSON.stringify(body);
      init.headers = this.headers({ "Content-Type": "application/json" });
    }
    if (signal) init.signal = signal;
    const response = await fetch(url, init);
    const data: unknown = await response.json();
    if (!response.ok) {
      const envelope = (data as { error?: ApiErrorBody }).error;
      throw new ApiError(
        response.status,
        envelope ?? { kind: "unknown", message: `HTTP ${response.status}` },
      );
    }
    return data as T;
  }

  providers(surface: string): Promise<{ providers: ProviderInfo[] }> {
    return this.request("GET", "/api/providers", { surface });
  }

  overviews(): Promise<{ views: ViewJson[] }> {
    return this.request("GET", "/api/overviews");
  }

  view(type: string, name: string, options: ViewRequest = {}): Promise<ViewJson> {
    const params: Record<string, string> = {};
    if (options.q) params["q"] = options.q;
    for (const [slot, value] of Object.entries(options.inputs ?? {})) {
      params[`input.${slot}`] = value;
    }
    return this.request(
      "GET",
      `/api/views/${encodeURIComponent(type)}/${encodeURIComponent(name)}`,
      params,
    );
  }

  search(q: string): Promise<{ ids: string[]; artifacts: ArtifactDoc[] }> {
    return this.request("GET", "/api/search", { q });
  }

  suggest(
    q: string,
    cursor?: number,
    signal?: AbortSignal,
  ): Promise<{ suggestions: Suggestion[] }> {
    return this.request("GET", "/api/suggest", { q, cursor }, undefined, signal);
  }

  parseQuery(q: string): Promise<{ ast: AstJson }> {
    return this.request("GET", "/api/parse", { q });
  }

  artifact(id: string): Promise<{ artifact: ArtifactDoc }> {
    return this.request("GET", `/api/artifacts/${encodeURIComponent(id)}`);
  }

  related(id: string): Promise<{ artifact: ArtifactDoc; views: ViewJson[] }> {
    return this.request("GET", `/api/artifacts/${encodeURIComponent(id)}/related`);
  }

  getUserConfig(): Promise<UserConfigJson> {
    return this.request("GET", "/api/config/user");
  }

  putUserConfig(change: Partial<UserConfigJson>): Promise<UserConfigJson> {
    return this.request("PUT", "/api/config/user", undefined, change);
  }

  getTeamConfig(team: string): Promise<TeamConfigJson> {
    return this.request("GET", `/api/config/team/${encodeURIComponent(team)}`);
  }

  putTeamConfig(
    team: string,
    change: Partial<TeamConfigJson>,
  ): Promise<TeamConfigJson> {
    return this.request(
      "PUT",
      `/api/config/team/${encodeURIComponent(team)}`,
      undefined,
      change,
    );
  }

  getAdminConfig(): Promise<AdminConfigJson> {
    return this.request("GET", "/api/config/admin");
  }

  putAdminConfig(change: Partial<AdminConfigJson>): Promise<AdminConfigJson> {
    return this.request("PUT", "/api/config/admin", undefined, change);
  }
}

/** Latest-wins gate for request streams (suggest, filter): each call
 * supersedes the one before; a superseded call resolves to undefined and
 * its network request is aborted. */
export function latestWins<A extends unknown[], T>(
  run: (signal: AbortSignal, ...args: A) => Promise<T>,
): (...args: A) => Promise<T | undefined> {
  let controller: AbortController | null = null;
  return async (...args: A): Promise<T | undefined> => {
    controller?.abort();
    const mine = new AbortController();
    controller = mine;
    try {
      const result = await run(mine.signal, ...args);
      return controller === mine ? result : undefined;
    } catch (error) {
      if (mine.signal.aborted) return undefined;
      throw error;
    }
  };
}
