// DOM-free timeline logic: searching, pagination, and the meta dialog
// contract (exactly one telemetry event per meta opening). The DOM layer in
// app.ts only renders this state and forwards user gestures.

import type { ApiClient } from './api.js';
import { ApiError } from './api.js';
import { FilterPanelState } from './state.js';
import type { ClickTracker } from './telemetry.js';
import type { MetaInfo, PageResponse } from './types.js';

export type MetaResult = { status: 'ok'; meta: MetaInfo } | { status: 'not_found' };

export class TimelineController {
  readonly panel = new FilterPanelState();
  lastPage: PageResponse | null = null;
  /** Server error message, shown verbatim. */
  error: string | null = null;
  loading = false;

  private requestCounter = 0;

  constructor(
    private readonly api: ApiClient,
    private readonly tracker: ClickTracker,
  ) {}

  /**
   * Run the current panel query. A newer search supersedes an older
   * in-flight one: stale responses are dropped. Only user-initiated
   * searches emit the search_button click.
   */
  async search(options: { userClick?: boolean } = {}): Promise<PageResponse | null> {
    if (options.userClick) this.tracker.emit('search_button');
    const ticket = ++this.requestCounter;
    this.loading = true;
    try {
      const page = await this.api.fetchTimeline(this.panel.toQueryString());
      if (ticket !== this.requestCounter) return null; // superseded
      this.lastPage = page;
      this.error = null;
      this.panel.markSearched();
      return page;
    } catch (err) {
      if (ticket !== this.requestCounter) return null;
      this.lastPage = null;
      this.error = err instanceof ApiError ? err.message : 'request failed';
      return null;
    } finally {
      if (ticket === this.requestCounter) this.loading = false;
    }
  }

  get totalPages(): number {
    if (!this.lastPage) return 0;
    return Math.ceil(this.lastPage.total_matching / this.lastPage.page_size);
  }

  async nextPage(): Promise<PageResponse | null> {
    if (!this.lastPage || this.panel.page >= this.totalPages) return null;
    this.tracker.emit('page_next');
    this.panel.setPage(this.panel.page + 1);
    return this.search();
  }

  async previousPage(): Promise<PageResponse | null> {
    if (this.panel.page <= 1) return null;
    this.tracker.emit('page_prev');
    this.panel.setPage(this.panel.page - 1);
    return this.search();
  }

  /** Fetch the pop-up projection; emits exactly one meta_button event. */
  async openMeta(tweetId: string): Promise<MetaResult> {
    this.tracker.emit('meta_button', tweetId);
    try {
      return { status: 'ok', meta: await this.api.fetchMeta(tweetId) };
    } catch (err) {
      if (err instanceof ApiError && err.status === 404) return { status: 'not_found' };
      throw err;
    }
  }
}
