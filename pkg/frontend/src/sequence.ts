/**
 * Request ordering for the what-if loop: edits fire often, responses arrive
 * out of order, and only the newest request's answer may reach the screen.
 */

/** Monotonic tags; a response is stale unless its tag is still the latest. */
export class RequestSequencer {
  private issued = 0;
  private applied = 0;

  next(): number {
    this.issued += 1;
    return this.issued;
  }

  /** True (and records it) when this tag's response may be applied. */
  accept(tag: number): boolean {
    if (tag < this.applied || tag < this.issued) {
      return false;
    }
    this.applied = tag;
    return true;
  }

  get latest(): number {
    return this.issued;
  }
}

export type Cancel = () => void;

/**
 * Trailing-edge debounce; the returned function also exposes cancel().
 * Default delay matches the console's edit debounce of 300 ms.
 */
export function debounce<A extends unknown[]>(
  fn: (...args: A) => void,
  delayMs = 300,
): ((...args: A) => void) & { cancel: Cancel } {
  let timer: ReturnType<typeof setTimeout> | undefined;
  const wrapped = (...args: A): void => {
    if (timer !== undefined) {
      clearTimeout(timer);
    }
    timer = setTimeout(() => {
      timer = undefined;
      fn(...args);
    }, delayMs);
  };
  wrapped.cancel = () => {
    if (timer !== undefined) {
      clearTimeout(timer);
      timer = undefined;
    }
  };
  return wrapped;
}
