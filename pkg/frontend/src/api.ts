// Typed client for the backend JSON API. The session token lives in memory
// only: a page reload means signing in again, and nothing touches storage.

import type { ClickPayload, ClickReceipt, MetaInfo, PageResponse, SessionInfo } from './types.js';

export class ApiError extends Error {
  constructor(
    public readonly status: number,
    public readonly code: string,
    message: string,
  ) {
    super(message);
    this.name = 'ApiError';
  }
}

async function parseError(response: Response): Promise<ApiError> {
  let code = 'UNKNOWN';
  let message = `HTTP ${response.status}`;
  try {
    const body = (await response.json()) as { code?: string; message?: string };
    if (body.code) code = body.code;
    if (body.message) message = body.message;
  } catch {
    // non-JSON error body; keep the generic message
  }
  return new ApiError(response.status, code, message);
}

export class ApiClient {
  private token: string | null = null;

  constructor(private readonly baseUrl: string = '') {}

  get signedIn(): boolean {
    return this.token !== null;
  }

  private headers(json = false): Record<string, string> {
    const out: Record<string, string> = {};
    if (this.token) out['Authorization'] = `Bearer ${this.token}`;
    if (json) out['Content-Type'] = 'application/json';
    return out;
  }

  async signIn(username: string, password: string): Promise<SessionInfo> {
    const response = await fetch(`${this.baseUrl}/api/session`, {
      method: 'POST',
      headers: { 'Content-Type': 'application/json' },
      body: JSON.stringify({ username, password }),
    });
    if (!response.ok) throw await parseError(response);
    const session = (await response.json()) as SessionInfo;
    this.token = session.token;
    return session;
  }

  signOut(): void {
    this.token = null;
  }

  async fetchTimeline(queryString: string): Promise<PageResponse> {
    const suffix = queryString ? `?${queryString}` : '';
    const response = await fetch(`${this.baseUrl}/api/tweets${suffix}`, { headers: this.headers() });
    if (!response.ok) throw await parseError(response);
    return (await response.json()) as PageResponse;
  }

  async fetchMeta(tweetId: string): Promise<MetaInfo> {
    const response = await fetch(`${this.baseUrl}/api/tweets/${encodeURIComponent(tweetId)}/meta`, {
      headers: this.headers(),
    });
    if (!response.ok) throw await parseError(response);
    return (await response.json()) as MetaInfo;
  }

  async postClick(event: ClickPayload): Promise<ClickReceipt> {
    const response = await fetch(`${this.baseUrl}/api/events/click`, {
      method: 'POST',
      headers: this.headers(true),
      body: JSON.stringify(event),
    });
    if (!response.ok) throw await parseError(response);
    return (await response.json()) as ClickReceipt;
  }
}
