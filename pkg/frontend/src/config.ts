// API base URL resolution. The bundle is normally served by the API process
// itself, so the default is same-origin relative paths; a deployment can
// point elsewhere by setting window.TWEETFILTER_API_BASE before app.js loads.

declare global {
  interface Window {
    TWEETFILTER_API_BASE?: string;
  }
}

export function apiBaseUrl(): string {
  if (typeof window !== 'undefined' && window.TWEETFILTER_API_BASE) {
    return window.TWEETFILTER_API_BASE.replace(/\/$/, '');
  }
  return '';
}
